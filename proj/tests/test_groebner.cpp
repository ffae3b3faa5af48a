#include "doctest.h"

#include "hypex/fan.hpp"
#include "hypex/groebner.hpp"
#include "test_helpers.hpp"

#include <random>

using namespace hypex;
using namespace hypex::testing;

namespace {

// membership oracle: binomials built from random kernel vectors must
// reduce to zero against a generating Groebner basis
void check_membership_oracle(const GaleDiagram& b, const GroebnerBasis& gb) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 60; ++it) {
    IntVec z{Int(static_cast<long>(rng() % 9) - 4), Int(static_cast<long>(rng() % 9) - 4)};
    if (z[0] == 0 && z[1] == 0) continue;
    Binomial candidate = binomial_from_difference(b.apply(z));
    CHECK(!normal_form(candidate, gb));
  }
}

bool spair_reduces_to_zero(const GroebnerBasis& gb) {
  for (size_t i = 0; i < gb.elements.size(); ++i)
    for (size_t j = i + 1; j < gb.elements.size(); ++j) {
      const Binomial& f = gb.elements[i];
      const Binomial& g = gb.elements[j];
      Exp lcm(f.plus.size());
      for (size_t k = 0; k < lcm.size(); ++k) lcm[k] = std::max(f.plus[k], g.plus[k]);
      Binomial s;
      s.plus.resize(lcm.size());
      s.minus.resize(lcm.size());
      for (size_t k = 0; k < lcm.size(); ++k) {
        s.plus[k] = lcm[k] - g.plus[k] + g.minus[k];
        s.minus[k] = lcm[k] - f.plus[k] + f.minus[k];
      }
      if (normal_form(s, gb)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("term order basics") {
  TermOrder grevlex = TermOrder::grevlex(3);
  // same degree: grevlex prefers the monomial with less of the cheapest variable
  CHECK(grevlex.compare({1, 1, 0}, {0, 0, 2}) > 0);
  CHECK(grevlex.compare({2, 0, 0}, {0, 2, 0}) > 0);
  TermOrder w = TermOrder::weighted({{-1, 0, 0}}, 3);
  // weight dominates: -e1 makes x1-heavy monomials small
  CHECK(w.compare({2, 0, 0}, {0, 1, 1}) < 0);
}

TEST_CASE("single binomial is its own reduced basis") {
  Binomial b;
  b.plus = {1, 0, 1};
  b.minus = {0, 2, 0};
  GroebnerBasis gb = groebner_basis({b}, TermOrder::grevlex(3));
  REQUIRE(gb.elements.size() == 1);
  // grevlex marks d2^2 as the lead of d2^2 - d1*d3
  CHECK(gb.elements[0].plus == Exp{0, 2, 0});
  CHECK(gb.elements[0].minus == Exp{1, 0, 1});
}

TEST_CASE("buchberger closes the given generators under s-pairs") {
  Binomial g1{{1, 0, 1, 0}, {0, 2, 0, 0}};
  Binomial g2{{0, 1, 0, 1}, {0, 0, 2, 0}};
  GroebnerBasis gb = groebner_basis({g1, g2}, TermOrder::grevlex(4));
  CHECK(spair_reduces_to_zero(gb));
  CHECK(!normal_form(g1, gb));
  CHECK(!normal_form(g2, gb));
  for (const Binomial& g : gb.elements) CHECK(g.disjoint_supports());
}

TEST_CASE("saturation supplies the relations missing from a sub-ideal") {
  // the kernel-basis binomials of the twisted cubic generate a strict
  // sub-ideal; saturating by the variables recovers d2*d3 - d1*d4
  GaleDiagram b = integer_kernel_basis(a_cm());
  GroebnerBasis full = lattice_ideal_generators(b);
  CHECK(full.elements.size() == 3);
  Binomial missing{{0, 1, 1, 0}, {1, 0, 0, 1}};
  CHECK(!normal_form(missing, full));
  CHECK(spair_reduces_to_zero(full));
}

TEST_CASE("normal form idempotence on random homogeneous binomials") {
  Binomial g1{{1, 0, 1, 0}, {0, 2, 0, 0}};
  Binomial g2{{0, 1, 0, 1}, {0, 0, 2, 0}};
  GroebnerBasis gb = groebner_basis({g1, g2}, TermOrder::grevlex(4));
  std::mt19937_64 rng(3);
  for (int it = 0; it < 100; ++it) {
    Binomial b;
    b.plus.resize(4);
    b.minus.resize(4);
    long deg = 0;
    for (int i = 0; i < 4; ++i) {
      b.plus[i] = static_cast<long>(rng() % 4);
      deg += b.plus[i];
    }
    b.minus[0] = deg;  // keep the binomial homogeneous
    auto r1 = normal_form(b, gb);
    if (!r1) continue;
    auto r2 = normal_form(*r1, gb);
    REQUIRE(r2);
    CHECK(*r1 == *r2);
  }
}

TEST_CASE("lattice ideal generators for the normalized 2x4 gale diagram") {
  GaleDiagram b;
  b.rows = {{1, 1}, {-1, 2}, {-1, -2}, {1, -1}};
  b.provenance = {0, 1, 2, 3};
  GroebnerBasis gb = lattice_ideal_generators(b);
  CHECK(!gb.elements.empty());
  for (const Binomial& g : gb.elements) {
    CHECK(g.disjoint_supports());
    CHECK(b.coordinates(IntVec{Int(g.plus[0] - g.minus[0]), Int(g.plus[1] - g.minus[1]),
                               Int(g.plus[2] - g.minus[2]), Int(g.plus[3] - g.minus[3])}));
  }
  check_membership_oracle(b, gb);
}

TEST_CASE("lattice ideal of the 3x5 example") {
  GaleDiagram b = integer_kernel_basis(a5());
  GroebnerBasis gb = lattice_ideal_generators(b);
  check_membership_oracle(b, gb);
  // d2*d3 - d1*d4 is a relation: columns satisfy a2+a3 = a1+a4
  Binomial rel{{0, 1, 1, 0, 0}, {1, 0, 0, 1, 0}};
  CHECK(!normal_form(rel, gb));
  // a single-difference lattice stays principal-like
  GaleDiagram tiny;
  tiny.rows = {{1, 0}, {-1, 0}, {0, 1}, {0, -2}, {0, 1}};
  tiny.provenance = {0, 1, 2, 3, 4};
  GroebnerBasis tgb = lattice_ideal_generators(tiny);
  Binomial swap12{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}};
  CHECK(!normal_form(swap12, tgb));
}

TEST_CASE("initial ideal with zero weight is the ideal itself") {
  GaleDiagram b = integer_kernel_basis(a5());
  GroebnerBasis gb = lattice_ideal_generators(b);
  InitialIdeal init = initial_ideal(gb, {Weight(5, 0)});
  CHECK(!init.is_monomial);
  CHECK(init.monomials.empty());
  CHECK(init.binomials.size() == gb.elements.size());
}

TEST_CASE("chained weight (-e3, w) yields a monomial ideal avoiding d3") {
  GaleDiagram b = integer_kernel_basis(a5());
  GroebnerBasis gb = lattice_ideal_generators(b);
  Weight minus_e3(5, 0);
  minus_e3[2] = -1;
  ChainedInitial chained = monomial_initial_by_chain(gb.elements, minus_e3, 0);
  CHECK(!chained.ideal.generators().empty());
  for (const Exp& g : chained.ideal.generators()) CHECK(g[2] == 0);
}

TEST_CASE("marked coherence check rejects foreign weights") {
  GaleDiagram b = integer_kernel_basis(a5());
  GroebnerBasis gb = lattice_ideal_generators(b);
  // reversing a marked difference must be detected
  for (const Binomial& g : gb.elements) {
    Weight w(5, 0);
    for (int i = 0; i < 5; ++i) w[i] = -(g.plus[i] - g.minus[i]);
    long s = 0;
    for (int i = 0; i < 5; ++i) s += w[i] * (g.plus[i] - g.minus[i]);
    if (s < 0) {
      CHECK_THROWS_AS(initial_ideal(gb, {w}), NotAGBForThisWeight);
      break;
    }
  }
}

TEST_CASE("monomial ideal minimal generators and saturation") {
  MonomialIdeal m({{2, 0}, {1, 1}, {2, 1}, {1, 1}});
  CHECK(m.generators().size() == 2);
  CHECK(m.contains(Exp{3, 0}));
  CHECK(m.contains(Exp{1, 2}));
  CHECK(!m.contains(Exp{1, 0}));
  CHECK(!m.contains(Exp{0, 5}));
  MonomialIdeal sat = m.saturate_vars({0});
  CHECK(sat.is_unit());  // d1^2 drops to 1
  MonomialIdeal sat2 = m.saturate_vars({1});
  CHECK(sat2.generators() == std::vector<Exp>{{1, 0}});
}
