#pragma once

// Lattice (toric) ideals as binomials, Buchberger completion under
// weight-refined orders, initial ideals, and saturation. All input
// ideals here are homogeneous (the configurations carry an all-ones
// row), so fibers {u : A u = const} are finite and weight vectors with
// negative entries are legitimate: comparisons only ever happen inside
// a fiber, where any weight chain refined by grevlex is a total order.

#include "hypex/config.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hypex {

using Exp = std::vector<long>;  // exponent vector in N^n
using Weight = std::vector<long>;

// x^plus - x^minus, plus marked leading once oriented by an order.
struct Binomial {
  Exp plus, minus;

  bool operator==(const Binomial& o) const { return plus == o.plus && minus == o.minus; }
  bool operator<(const Binomial& o) const {
    return plus != o.plus ? plus < o.plus : minus < o.minus;
  }
  Exp difference() const;  // plus - minus (entries may be negative)
  bool disjoint_supports() const;
};

// Weight chain, refined by graded reverse lex with a variable priority
// permutation (priority[0] most expensive, priority.back() cheapest).
struct TermOrder {
  std::vector<Weight> weight_chain;
  std::vector<int> grevlex_priority;

  static TermOrder grevlex(int n);
  static TermOrder grevlex_cheapest(int n, int cheapest_var);
  static TermOrder weighted(std::vector<Weight> chain, int n);

  // sign of cmp(u, v): >0 iff x^u > x^v
  int compare(const Exp& u, const Exp& v) const;
  // comparison by the weight chain only (no tie break); 0 = tie
  int compare_weights_only(const Exp& u, const Exp& v) const;
};

struct GroebnerBasis {
  std::vector<Binomial> elements;  // reduced, oriented, canonically sorted
  TermOrder order;
};

Binomial binomial_from_difference(const IntVec& diff);
Binomial binomial_from_difference(const Exp& diff);

// Reduced Groebner basis of the binomial ideal generated by gens.
GroebnerBasis groebner_basis(std::vector<Binomial> gens, const TermOrder& order);

// Full normal form of a binomial; zero is returned as nullopt.
std::optional<Binomial> normal_form(Binomial b, const GroebnerBasis& gb);

// Generators of the saturated lattice ideal I_A from a kernel basis:
// saturate <x^{B1+}-x^{B1-}, x^{B2+}-x^{B2-}> by every variable.
// Output is the reduced Groebner basis under plain grevlex.
GroebnerBasis lattice_ideal_generators(const GaleDiagram& b);

// Minimal generators of a monomial ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::vector<Exp> gens) { assign(std::move(gens)); }

  void assign(std::vector<Exp> gens);
  const std::vector<Exp>& generators() const { return gens_; }
  bool contains(const Exp& m) const;  // divisibility by some generator
  bool is_unit() const;               // contains 1
  bool empty() const { return gens_.empty(); }
  int nvars() const { return gens_.empty() ? 0 : static_cast<int>(gens_[0].size()); }

  // generators with the coordinates in `vars` zeroed, re-minimalized
  // (the saturation of the ideal by the product of those variables)
  MonomialIdeal saturate_vars(const std::vector<int>& vars) const;

  bool operator==(const MonomialIdeal& o) const { return gens_ == o.gens_; }
  bool operator<(const MonomialIdeal& o) const { return gens_ < o.gens_; }

 private:
  std::vector<Exp> gens_;  // minimal, sorted
};

struct InitialIdeal {
  std::vector<Exp> monomials;       // initial forms that are monomials
  std::vector<Binomial> binomials;  // ties that stay binomial
  bool is_monomial = false;
  MonomialIdeal monomial_ideal() const { return MonomialIdeal(monomials); }
};

struct NotAGBForThisWeight : std::runtime_error {
  explicit NotAGBForThisWeight(const std::string& w) : std::runtime_error(w) {}
};

// Initial ideal of gb under a weight chain. Throws NotAGBForThisWeight
// when the basis' marking is incoherent with the chain (some marked
// leading term loses strictly).
InitialIdeal initial_ideal(const GroebnerBasis& gb, const std::vector<Weight>& chain);

std::string to_string(const Binomial& b);

}  // namespace hypex
