#include "hypex/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace hypex {

Exp Binomial::difference() const {
  Exp d(plus.size());
  for (size_t i = 0; i < plus.size(); ++i) d[i] = plus[i] - minus[i];
  return d;
}

bool Binomial::disjoint_supports() const {
  for (size_t i = 0; i < plus.size(); ++i)
    if (plus[i] > 0 && minus[i] > 0) return false;
  return true;
}

TermOrder TermOrder::grevlex(int n) {
  TermOrder t;
  t.grevlex_priority.resize(n);
  std::iota(t.grevlex_priority.begin(), t.grevlex_priority.end(), 0);
  return t;
}

TermOrder TermOrder::grevlex_cheapest(int n, int cheapest_var) {
  TermOrder t = grevlex(n);
  t.grevlex_priority.erase(t.grevlex_priority.begin() + cheapest_var);
  t.grevlex_priority.push_back(cheapest_var);
  return t;
}

TermOrder TermOrder::weighted(std::vector<Weight> chain, int n) {
  TermOrder t = grevlex(n);
  t.weight_chain = std::move(chain);
  return t;
}

int TermOrder::compare_weights_only(const Exp& u, const Exp& v) const {
  for (const Weight& w : weight_chain) {
    long long s = 0;
    for (size_t i = 0; i < u.size(); ++i) s += static_cast<long long>(w[i]) * (u[i] - v[i]);
    if (s > 0) return 1;
    if (s < 0) return -1;
  }
  return 0;
}

int TermOrder::compare(const Exp& u, const Exp& v) const {
  int c = compare_weights_only(u, v);
  if (c != 0) return c;
  long long du = 0, dv = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    du += u[i];
    dv += v[i];
  }
  if (du != dv) return du > dv ? 1 : -1;
  // reverse lex: scan from the cheapest variable; the first difference
  // found decides, smaller exponent there means larger monomial
  for (int k = static_cast<int>(grevlex_priority.size()) - 1; k >= 0; --k) {
    int var = grevlex_priority[k];
    long d = u[var] - v[var];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

Binomial binomial_from_difference(const IntVec& diff) {
  Exp d(diff.size());
  for (size_t i = 0; i < diff.size(); ++i) {
    assert(diff[i].fits_slong_p());
    d[i] = diff[i].get_si();
  }
  return binomial_from_difference(d);
}

Binomial binomial_from_difference(const Exp& diff) {
  Binomial b;
  b.plus.assign(diff.size(), 0);
  b.minus.assign(diff.size(), 0);
  for (size_t i = 0; i < diff.size(); ++i) {
    if (diff[i] > 0)
      b.plus[i] = diff[i];
    else
      b.minus[i] = -diff[i];
  }
  return b;
}

namespace {

bool divides(const Exp& a, const Exp& b) {  // x^a | x^b
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// orient so that plus is leading; false if the binomial is zero
bool orient(Binomial& b, const TermOrder& order) {
  int c = order.compare(b.plus, b.minus);
  if (c == 0) return false;
  if (c < 0) std::swap(b.plus, b.minus);
  return true;
}

// full normal form against basis; false if reduced to zero
bool reduce_full(Binomial& b, const std::vector<Binomial>& basis, const TermOrder& order) {
  if (!orient(b, order)) return false;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Binomial& g : basis) {
      if (divides(g.plus, b.plus)) {
        for (size_t i = 0; i < b.plus.size(); ++i) b.plus[i] += g.minus[i] - g.plus[i];
        if (!orient(b, order)) return false;
        changed = true;
        break;
      }
    }
  }
  // tail reduction
  changed = true;
  while (changed) {
    changed = false;
    for (const Binomial& g : basis) {
      if (divides(g.plus, b.minus)) {
        for (size_t i = 0; i < b.minus.size(); ++i) b.minus[i] += g.minus[i] - g.plus[i];
        if (!orient(b, order)) return false;
        changed = true;
        break;
      }
    }
  }
  return true;
}

Binomial spair(const Binomial& f, const Binomial& g) {
  const size_t n = f.plus.size();
  Exp lcm(n);
  for (size_t i = 0; i < n; ++i) lcm[i] = std::max(f.plus[i], g.plus[i]);
  Binomial s;
  s.plus.resize(n);
  s.minus.resize(n);
  for (size_t i = 0; i < n; ++i) {
    s.plus[i] = lcm[i] - g.plus[i] + g.minus[i];
    s.minus[i] = lcm[i] - f.plus[i] + f.minus[i];
  }
  return s;
}

bool coprime_leads(const Binomial& f, const Binomial& g) {
  for (size_t i = 0; i < f.plus.size(); ++i)
    if (f.plus[i] > 0 && g.plus[i] > 0) return false;
  return true;
}

}  // namespace

GroebnerBasis groebner_basis(std::vector<Binomial> gens, const TermOrder& order) {
  std::vector<Binomial> basis;
  for (Binomial& b : gens)
    if (orient(b, order)) basis.push_back(b);

  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (coprime_leads(basis[i], basis[j])) continue;
    Binomial s = spair(basis[i], basis[j]);
    if (!reduce_full(s, basis, order)) continue;
    size_t k = basis.size();
    basis.push_back(s);
    for (size_t l = 0; l < k; ++l) pairs.emplace_back(l, k);
  }

  // minimalize: drop elements whose lead is divisible by another lead
  std::vector<Binomial> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(basis[j].plus, basis[i].plus) &&
          (basis[i].plus != basis[j].plus || j < i))
        redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // inter-reduce tails against the other elements
  std::vector<Binomial> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    Binomial b = minimal[i];
    std::vector<Binomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    bool nonzero = reduce_full(b, others, order);
    assert(nonzero);
    reduced.push_back(b);
  }
  std::sort(reduced.begin(), reduced.end());
  reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
  GroebnerBasis gb;
  gb.elements = std::move(reduced);
  gb.order = order;
  return gb;
}

std::optional<Binomial> normal_form(Binomial b, const GroebnerBasis& gb) {
  if (!reduce_full(b, gb.elements, gb.order)) return std::nullopt;
  return b;
}

namespace {

Binomial strip_variable(const Binomial& b, int var) {
  Binomial r = b;
  long m = std::min(r.plus[var], r.minus[var]);
  r.plus[var] -= m;
  r.minus[var] -= m;
  return r;
}

}  // namespace

GroebnerBasis lattice_ideal_generators(const GaleDiagram& b) {
  const int n = b.n();
  std::vector<Binomial> gens;
  for (int k = 0; k < 2; ++k) gens.push_back(binomial_from_difference(b.column(k)));
  // saturate by each variable in turn: a Groebner basis under grevlex
  // with x_i cheapest, all elements divided by their x_i content,
  // generates (J : x_i^infty)
  for (int i = 0; i < n; ++i) {
    GroebnerBasis gb = groebner_basis(gens, TermOrder::grevlex_cheapest(n, i));
    gens.clear();
    for (const Binomial& g : gb.elements) gens.push_back(strip_variable(g, i));
  }
  return groebner_basis(gens, TermOrder::grevlex(n));
}

void MonomialIdeal::assign(std::vector<Exp> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  gens_.clear();
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && divides(gens[j], gens[i]) && (gens[i] != gens[j] || j < i))
        redundant = true;
    if (!redundant) gens_.push_back(gens[i]);
  }
}

bool MonomialIdeal::contains(const Exp& m) const {
  for (const Exp& g : gens_)
    if (divides(g, m)) return true;
  return false;
}

bool MonomialIdeal::is_unit() const {
  for (const Exp& g : gens_) {
    bool all_zero = true;
    for (long e : g) all_zero = all_zero && e == 0;
    if (all_zero) return true;
  }
  return false;
}

MonomialIdeal MonomialIdeal::saturate_vars(const std::vector<int>& vars) const {
  std::vector<Exp> gens = gens_;
  for (Exp& g : gens)
    for (int v : vars) g[v] = 0;
  MonomialIdeal m;
  m.assign(std::move(gens));
  return m;
}

InitialIdeal initial_ideal(const GroebnerBasis& gb, const std::vector<Weight>& chain) {
  TermOrder probe;
  probe.weight_chain = chain;
  InitialIdeal out;
  out.is_monomial = true;
  for (const Binomial& g : gb.elements) {
    int c = probe.compare_weights_only(g.plus, g.minus);
    if (c < 0)
      throw NotAGBForThisWeight("marked leading term loses under the given weight chain");
    if (c > 0) {
      out.monomials.push_back(g.plus);
    } else {
      out.binomials.push_back(g);
      out.is_monomial = false;
    }
  }
  return out;
}

std::string to_string(const Binomial& b) {
  auto mono = [](const Exp& e) {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) os << "*";
      os << "d" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      any = true;
    }
    if (!any) os << "1";
    return os.str();
  };
  return mono(b.plus) + " - " + mono(b.minus);
}

}  // namespace hypex
