#pragma once

// Negative supports, the minimum-negative-support test (decided by 2D
// integer feasibility, one escape pattern per support element), and
// truncated logarithm-free canonical series with exact factored
// coefficients. Series verification applies the toric operators
// formally and demands exact interior cancellation.

#include "hypex/affine.hpp"
#include "hypex/config.hpp"
#include "hypex/groebner.hpp"

#include <set>
#include <vector>

namespace hypex {

// indices (0-based) whose coordinate is a negative integer
std::set<int> negative_support(const ParamVector& x);

// no z in Z^2 makes nsupp(x + Bz) a strict subset of nsupp(x)
bool has_minimum_negative_support(const ParamVector& x, const GaleDiagram& b);

// kernel translate membership: nsupp(v + Bz) == nsupp(v)
bool in_series_support(const ParamVector& v, const GaleDiagram& b, const IntVec& z);

struct SeriesTerm {
  std::vector<long> z;                  // kernel coordinates of the translate
  std::vector<AffineForm> numerator;    // factored falling products
  std::vector<AffineForm> denominator;  // factored rising products, all nonzero
};

struct SeriesTruncation {
  ParamVector base;        // the exponent v
  long radius = 0;         // max-norm truncation bound on z
  std::vector<SeriesTerm> terms;  // lexicographic in z; z = 0 has empty products

  const SeriesTerm* term_at(const std::vector<long>& z) const;
};

struct ZeroDenominator : std::logic_error {
  explicit ZeroDenominator(const std::string& w) : std::logic_error(w) {}
};

// Truncated canonical series for an exponent with minimum negative
// support. Term coefficients are ratios of factored products; a zero
// denominator factor is an invariant violation and throws.
SeriesTruncation canonical_series(const ParamVector& v, const GaleDiagram& b, long radius);

// Numeric coefficient of a term after substituting rationals for the
// symbols (display only).
Rat evaluate_coefficient(const SeriesTerm& t, const std::map<int, Rat>& alpha);

struct SeriesCancellationIssue {
  Binomial op;
  std::vector<long> z;       // the term whose image failed to cancel
  std::string what;
};

struct SeriesBoundaryTerm {
  Binomial op;
  std::vector<long> z_inside;   // stored term
  std::vector<long> z_outside;  // partner beyond the truncation radius
};

struct SeriesVerification {
  bool homogeneous = false;              // A(v + Bz) = A v for every term
  std::vector<SeriesCancellationIssue> failures;
  std::vector<SeriesBoundaryTerm> boundary;  // listed, not failures
  size_t pairs_checked = 0;
  bool ok() const { return homogeneous && failures.empty(); }
};

// Applies every basis binomial to the truncation. Interior images must
// cancel exactly (coefficient identity over Q[alpha]); images whose
// partner translate leaves the series support must vanish on their own;
// partners beyond the radius are reported as boundary terms.
SeriesVerification verify_series(const Configuration& a, const SeriesTruncation& phi,
                                 const GroebnerBasis& gb, const GaleDiagram& b);

}  // namespace hypex
