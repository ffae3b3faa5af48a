#pragma once

// The exceptional-parameter construction for non-Cohen-Macaulay
// codimension-2 configurations: after quadrant normalization,
//   v    = B1+ + B2+ - e1 - e2 - e4 + sum_{i>=5} alpha_i e_i
//   beta = A (v - e3),
// together with its finite witness suite (shifted-vector negative
// supports, fiber uniqueness, the embedded standard pair, the
// quadrant-lemma vectors, and the e3-shift of kernel exponents),
// fake/log-free exponent enumeration, and the exceptional family.

#include "hypex/config.hpp"
#include "hypex/fan.hpp"
#include "hypex/series.hpp"
#include "hypex/standard_pairs.hpp"
#include "hypex/subspace.hpp"

#include <string>
#include <vector>

namespace hypex {

struct Construction {
  Configuration normalized_a;   // columns in the normalized order
  NormalizedGale gale;
  ParamVector v;     // over normalized coordinates; alphas at indices >= 5 (1-based)
  ParamVector beta;  // d entries
};

// Throws NormalizationImpossible on Cohen-Macaulay input (no Gale
// image meets the four open quadrants).
Construction construct_exceptional(const Configuration& a, long search_bound = 0);

// The affine family A (v1 e1 + v2 e2 - e3 + v4 e4 + sum s_i e_i):
// one (n-4)-dimensional component (a point when n = 4).
SubspaceArrangement exceptional_family(const Configuration& a, long search_bound = 0);

struct FakeExponent {
  ParamVector u;
  StandardPair pair;
};

// One fake exponent per standard pair of M when the restricted linear
// system is solvable; unsolvable pairs are counted, not returned.
std::vector<FakeExponent> fake_exponents(const Configuration& a, const ParamVector& beta,
                                         const MonomialIdeal& m,
                                         int* unsolvable_pairs = nullptr);

// Fake exponents with minimum negative support: they index a basis of
// the logarithm-free solutions at beta for the chosen weight.
std::vector<FakeExponent> logfree_exponents(const Configuration& a, const ParamVector& beta,
                                            const MonomialIdeal& m, const GaleDiagram& b,
                                            int* unsolvable_pairs = nullptr);

struct WitnessCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct WitnessReport {
  Construction construction;
  std::vector<WitnessCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// The five finite checks behind the construction, each a verdict:
//  1. the four shifted vectors have minimum negative support with
//     negative supports {3},{4},{2},{1} and distinguished entry -1
//  2. v is the unique minimum-negative-support vector in v + B Z^2
//  3. (d1^v1 d2^v2 d4^v4, {3,5..n}) is a standard pair of the chained
//     initial ideal
//  4. the vectors (1,1),(0,1),(1,0) satisfy the three embedded-prime
//     witness properties for that pair
//  5. every fake exponent u of the degree A*v with u3 = 0 and minimum
//     negative support keeps minimum negative support after the e3 shift
WitnessReport verify_construction_witnesses(const Configuration& a, unsigned long seed = 0,
                                            long search_bound = 0);

// Exponents indexing the kernel of the d3 map between solution spaces:
// fake exponents of degree A*v with u3 = 0 and minimum negative support.
std::vector<ParamVector> kernel_basis_exponents(const Configuration& a,
                                                unsigned long seed = 0,
                                                long search_bound = 0);

// Chained initial data for the normalized configuration: the lattice
// ideal, and the monomial initial ideal under (-e3, w).
struct NormalizedToricData {
  Construction construction;
  GroebnerBasis lattice_ideal;
  ChainedInitial chained;
};
NormalizedToricData normalized_toric_data(const Configuration& a, unsigned long seed = 0,
                                          long search_bound = 0);

}  // namespace hypex
