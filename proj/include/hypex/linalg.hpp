#pragma once

// Exact linear algebra over Q and Z: row reduction, linear solves,
// kernels, and the column-style Hermite normal form used to extract
// canonical integer kernel bases.

#include "hypex/rational.hpp"

#include <optional>
#include <vector>

namespace hypex {

using RatMat = std::vector<RatVec>;  // row-major
using IntMat = std::vector<IntVec>;  // row-major

RatMat to_rat(const IntMat& m);

// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(RatMat& m);

int rank(const RatMat& m);
int rank(const IntMat& m);

// Solves M x = rhs exactly. Returns nullopt if inconsistent; if the
// system is underdetermined, returns one solution with free variables
// set to zero and reports uniqueness through *unique.
std::optional<RatVec> solve(const RatMat& m, const RatVec& rhs, bool* unique = nullptr);

// Basis of the rational null space {x : M x = 0}.
std::vector<RatVec> kernel_basis(const RatMat& m);

// Column-style Hermite normal form: returns unimodular U with
// A*U = [H | 0], H in column HNF. A is d x n, U is n x n.
IntMat hnf_transform(const IntMat& a, IntMat& u);

// Canonical column HNF of an integer matrix (column operations only).
IntMat column_hnf(const IntMat& a);

Int det2(const Int& a, const Int& b, const Int& c, const Int& d);

IntMat mat_mul(const IntMat& a, const IntMat& b);
RatMat mat_mul(const RatMat& a, const RatMat& b);

IntVec mat_vec(const IntMat& a, const IntVec& x);
RatVec mat_vec(const RatMat& a, const RatVec& x);

}  // namespace hypex
