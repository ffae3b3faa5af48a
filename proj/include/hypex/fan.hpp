#pragma once

// Enumeration of all monomial initial ideals of a codimension-2 lattice
// ideal. Weight classes modulo the row space of A live in the plane:
// w = B*y identifies each class with y in R^2 and the Groebner fan
// becomes a complete fan of sectors there. The enumeration walks the
// sectors counterclockwise, flipping across boundary rays with an
// epsilon-free weight chain, so no ray is ever crossed numerically.

#include "hypex/config.hpp"
#include "hypex/groebner.hpp"

#include <iosfwd>
#include <optional>

namespace hypex {

struct FanCone {
  MonomialIdeal ideal;
  Weight witness;                 // n-dim weight interior to the cone
  std::vector<long> witness_y;    // 2-dim class representative
};

struct GroebnerFan {
  std::vector<FanCone> cones;  // sorted by ideal generators
};

// All distinct monomial initial ideals with interior witness weights.
GroebnerFan groebner_fan_monomial_initial_ideals(const GaleDiagram& b,
                                                 const GroebnerBasis& lattice_ideal);

// Same, but starting from a caller-chosen generic direction; used to
// check that the traversal is path independent.
GroebnerFan groebner_fan_from_start(const GaleDiagram& b, const GroebnerBasis& lattice_ideal,
                                    const std::vector<long>& y_start);

// w = B*y as a weight vector (entries must fit in long).
Weight gale_weight(const GaleDiagram& b, const std::vector<long>& y);

// Groebner basis and initial ideal under the chain (base_weight, w)
// with w drawn from a seeded stream and re-drawn until the chained
// initial ideal is a monomial ideal.
struct ChainedInitial {
  GroebnerBasis gb;
  MonomialIdeal ideal;
  Weight base_weight;
  Weight generic_weight;
  std::vector<Weight> chain() const { return {base_weight, generic_weight}; }
};
ChainedInitial monomial_initial_by_chain(const std::vector<Binomial>& gens,
                                         const Weight& base_weight, unsigned long seed);

// Plain-text fan cache (versioned). Reading validates the header, the
// configuration echo and record structure; any mismatch throws.
struct CacheError : std::runtime_error {
  explicit CacheError(const std::string& w) : std::runtime_error(w) {}
};

void write_fan_cache(std::ostream& os, const Configuration& a, const GroebnerFan& fan);
GroebnerFan read_fan_cache(std::istream& is, const Configuration& a);

}  // namespace hypex
