#include "doctest.h"

#include "hypex/fan.hpp"
#include "test_helpers.hpp"

#include <random>
#include <set>
#include <sstream>

using namespace hypex;
using namespace hypex::testing;

TEST_CASE("the 3x5 example has exactly 9 monomial initial ideals") {
  GaleDiagram b = integer_kernel_basis(a5());
  GroebnerBasis gb = lattice_ideal_generators(b);
  GroebnerFan fan = groebner_fan_monomial_initial_ideals(b, gb);
  CHECK(fan.cones.size() == 9);
  // witnesses reproduce their ideals
  for (const FanCone& c : fan.cones) {
    TermOrder order = TermOrder::weighted({c.witness}, 5);
    GroebnerBasis wgb = groebner_basis(gb.elements, order);
    InitialIdeal init = initial_ideal(wgb, {c.witness});
    REQUIRE(init.is_monomial);
    CHECK(init.monomial_ideal() == c.ideal);
  }
}

TEST_CASE("fan traversal is path independent") {
  GaleDiagram b = integer_kernel_basis(a5());
  GroebnerBasis gb = lattice_ideal_generators(b);
  GroebnerFan f1 = groebner_fan_from_start(b, gb, {3, 1});
  GroebnerFan f2 = groebner_fan_from_start(b, gb, {-5, 2});
  REQUIRE(f1.cones.size() == f2.cones.size());
  for (size_t i = 0; i < f1.cones.size(); ++i) CHECK(f1.cones[i].ideal == f2.cones[i].ideal);
}

TEST_CASE("random weight sampling finds no ideal outside the fan") {
  Configuration a = a2();
  GaleDiagram b = integer_kernel_basis(a);
  GroebnerBasis gb = lattice_ideal_generators(b);
  GroebnerFan fan = groebner_fan_monomial_initial_ideals(b, gb);
  std::set<MonomialIdeal> known;
  for (const FanCone& c : fan.cones) known.insert(c.ideal);
  std::mt19937_64 rng(17);
  int monomial_hits = 0;
  for (int it = 0; it < 500; ++it) {
    Weight w(4);
    for (int i = 0; i < 4; ++i) w[i] = static_cast<long>(rng() % 41) - 20;
    TermOrder order = TermOrder::weighted({w}, 4);
    GroebnerBasis wgb = groebner_basis(gb.elements, order);
    InitialIdeal init = initial_ideal(wgb, {w});
    if (!init.is_monomial) continue;
    ++monomial_hits;
    CHECK(known.count(init.monomial_ideal()) == 1);
  }
  CHECK(monomial_hits > 100);
}

TEST_CASE("lexicographic extremes are members of the fan") {
  GaleDiagram b = integer_kernel_basis(a5());
  GroebnerBasis gb = lattice_ideal_generators(b);
  GroebnerFan fan = groebner_fan_monomial_initial_ideals(b, gb);
  std::set<MonomialIdeal> known;
  for (const FanCone& c : fan.cones) known.insert(c.ideal);
  // lex-style chains: e1, e2, e3, e4 in both variable directions
  for (bool reversed : {false, true}) {
    std::vector<Weight> chain;
    for (int k = 0; k < 4; ++k) {
      Weight w(5, 0);
      w[reversed ? 4 - k : k] = 1;
      chain.push_back(w);
    }
    TermOrder order = TermOrder::weighted(chain, 5);
    GroebnerBasis lgb = groebner_basis(gb.elements, order);
    std::vector<Exp> leads;
    for (const Binomial& g : lgb.elements) leads.push_back(g.plus);
    CHECK(known.count(MonomialIdeal(leads)) == 1);
  }
}

TEST_CASE("fan cache round trip and integrity checks") {
  Configuration a = a2();
  GaleDiagram b = integer_kernel_basis(a);
  GroebnerBasis gb = lattice_ideal_generators(b);
  GroebnerFan fan = groebner_fan_monomial_initial_ideals(b, gb);
  std::ostringstream os;
  write_fan_cache(os, a, fan);
  std::istringstream is(os.str());
  GroebnerFan back = read_fan_cache(is, a);
  REQUIRE(back.cones.size() == fan.cones.size());
  for (size_t i = 0; i < fan.cones.size(); ++i) {
    CHECK(back.cones[i].ideal == fan.cones[i].ideal);
    CHECK(back.cones[i].witness == fan.cones[i].witness);
  }
  // corrupted header
  std::istringstream bad1("hypex-fan-cache 999\n");
  CHECK_THROWS_AS(read_fan_cache(bad1, a), CacheError);
  // cache for a different matrix
  std::istringstream bad2(os.str());
  CHECK_THROWS_AS(read_fan_cache(bad2, a5()), CacheError);
  // truncated body
  std::istringstream bad3(os.str().substr(0, os.str().size() / 2));
  CHECK_THROWS_AS(read_fan_cache(bad3, a), CacheError);
}
