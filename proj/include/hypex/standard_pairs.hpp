#pragma once

// Standard pairs (d^eta, sigma) of monomial ideals: eta vanishes on
// sigma, the stratum eta + N^sigma misses the ideal, and every
// variable outside sigma eventually enters it. Computed per face by
// saturation: (eta, sigma) qualifies iff eta is outside the sigma
// saturation but inside every (sigma + one variable) saturation, and
// such eta are bounded by the generator degrees.

#include "hypex/config.hpp"
#include "hypex/groebner.hpp"
#include "hypex/polytope2d.hpp"

#include <vector>

namespace hypex {

struct StandardPair {
  Exp eta;
  std::vector<int> sigma;  // 0-based, sorted

  bool operator==(const StandardPair& o) const { return eta == o.eta && sigma == o.sigma; }
  bool operator<(const StandardPair& o) const {
    return sigma != o.sigma ? sigma < o.sigma : eta < o.eta;
  }
};

// The complete set S(M), canonically ordered.
std::vector<StandardPair> standard_pairs(const MonomialIdeal& m, int n);

// Pairs with |sigma| = d; equals vol(A) for monomial initial ideals of
// a toric ideal.
int top_pair_count(const std::vector<StandardPair>& pairs, int d);

// Pairs whose sigma is not of the maximal cardinality d; they witness
// the embedded primes <d_i : i not in sigma>.
std::vector<StandardPair> embedded_pairs(const std::vector<StandardPair>& pairs, int d);

// Codimension-2 membership criterion: (d^eta, sigma) is a standard
// pair of the initial ideal selected by `chain` iff the lattice points
// of {z : (Bz)_i <= eta_i for i not in sigma, chain-nonneg(Bz)} are
// exactly the origin. chain-nonneg is the epsilon-free reading of
// (w1 + eps*w2)^T (Bz) >= 0.
bool standard_pair_polytope_check(const StandardPair& p, const GaleDiagram& b,
                                  const std::vector<Weight>& chain);

std::string to_string(const StandardPair& p);

}  // namespace hypex
