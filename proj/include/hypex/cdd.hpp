#pragma once

// The exceptional set of a two-row configuration [[1,...,1],[0,a2,...,an]]:
//   E(A) = ((NA + Z(1,0)) intersect (NA + Z(1,an))) \ NA.
// Membership reduces to numerical-monoid arithmetic in the second
// coordinate: (k, c) lies in NA iff c is a sum of at most k values
// from {a2..an}, and the shifted-set memberships depend only on
// monoid membership of c resp. an*b1 - c. E(A) is finite and is
// enumerated exactly through the per-residue minima of the monoids.

#include "hypex/rational.hpp"

#include <optional>
#include <vector>

namespace hypex {

struct CurveConfig {
  std::vector<long> a;  // 0 = a1 < a2 < ... < an, gcd 1 with the rest

  static CurveConfig create(const std::vector<long>& second_row);
  long an() const { return a.back(); }
  int n() const { return static_cast<int>(a.size()); }
};

// beta in the semigroup NA? decided by minimum-summand dynamic
// programming over the degree coordinate
bool semigroup_member_d2(const CurveConfig& c, long b1, long b2);

// beta in E(A)?
bool cdd_exceptional_member(const CurveConfig& c, long b1, long b2);

// the full (finite) exceptional set, sorted
std::vector<std::pair<long, long>> cdd_exceptional_set(const CurveConfig& c);

}  // namespace hypex
