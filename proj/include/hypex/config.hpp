#pragma once

// Point configurations A in {1} x Z^{d-1} of codimension 2, their Gale
// diagrams (integer kernel bases, n x 2), quadrant normalization, and
// the Cohen-Macaulayness test for codimension-2 toric ideals.

#include "hypex/affine.hpp"
#include "hypex/linalg.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypex {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what, std::string invariant = "")
      : std::runtime_error(what), invariant(std::move(invariant)) {}
  std::string invariant;
};

class Configuration {
 public:
  // Validates: first row all ones, rank d, n-d = 2, columns span Z^d.
  static Configuration create(IntMat entries);

  int d() const { return d_; }
  int n() const { return n_; }
  const IntMat& entries() const { return entries_; }
  IntVec column(int j) const;

  // Columns permuted: column i of the result is column perm[i] of *this.
  Configuration permuted(const std::vector<int>& perm) const;

 private:
  Configuration(IntMat e, int d, int n) : entries_(std::move(e)), d_(d), n_(n) {}
  IntMat entries_;
  int d_ = 0, n_ = 0;
};

struct GaleDiagram {
  IntMat rows;                    // n x 2; row i is the Gale vector of column i
  std::vector<int> provenance;    // column permutation applied to A (identity if none)

  IntVec column(int k) const {
    IntVec c(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) c[i] = rows[i][k];
    return c;
  }
  int n() const { return static_cast<int>(rows.size()); }

  // B * z for z in Z^2
  IntVec apply(const IntVec& z) const;
  // solves B z = w over Z; nullopt if w outside the column lattice
  std::optional<IntVec> coordinates(const IntVec& w) const;
};

// Canonical integer kernel basis of A (column HNF canonical form).
// Throws ConfigError if preconditions fail.
GaleDiagram integer_kernel_basis(const Configuration& a);

// Checks A*B = 0 and that the columns of B form a saturated lattice
// basis (gcd of all 2x2 minors is 1).
bool is_valid_gale(const Configuration& a, const GaleDiagram& b);

struct NormalizationImpossible : std::runtime_error {
  explicit NormalizationImpossible(const std::string& w) : std::runtime_error(w) {}
};

struct NormalizedGale {
  GaleDiagram gale;              // rows 1..4 in open quadrants Q1..Q4
  std::vector<int> column_order; // permutation of A's columns (0-based)
  IntMat transform;              // 2x2 unimodular V with B' = B_perm * V
};

// Puts one row in each open quadrant (rows 1..4 after permutation) and,
// when rows 2 and 4 are independent, makes the cone
// {z : (Bz)_2 >= 0, (Bz)_4 >= 0} lie in the closed first quadrant.
// Deterministic: first valid transform in a fixed search order
// (unimodular pairs by increasing max-norm, then permutations).
// search_bound <= 0 means the default 10 * max|b_ij|.
NormalizedGale gale_normalize(const GaleDiagram& b, long search_bound = 0);

struct CohenMacaulayResult {
  bool is_cm = true;
  // when not CM: the witnessing unimodular transform and row choice
  std::optional<IntMat> witness_transform;
  long bound_used = 0;
  bool search_exhausted = false;  // verdict "CM" rests on bound exhaustion
};

// False iff some GL2(Z) image of the Gale diagram has rows in all four
// open quadrants; the search is bounded and the bound is surfaced.
CohenMacaulayResult is_cohen_macaulay_codim2(const Configuration& a, long search_bound = 0);

// Exact solve for u with u_i fixed on `fixed` indices (0-based) and
// A u = beta over affine forms.
enum class SolveStatus { Unique, NoSolution, NonUnique };
struct ParamSolveResult {
  SolveStatus status;
  ParamVector u;  // valid when status == Unique
};
ParamSolveResult param_solve(const Configuration& a, const std::map<int, Rat>& fixed,
                             const ParamVector& beta);

}  // namespace hypex
