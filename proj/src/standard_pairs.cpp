#include "hypex/standard_pairs.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

namespace hypex {

namespace {

// subsets of {0..n-1} ordered by size then lexicographically
std::vector<std::vector<int>> subsets(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace

std::vector<StandardPair> standard_pairs(const MonomialIdeal& m, int n) {
  std::vector<StandardPair> out;
  if (m.empty()) {
    // the zero ideal has every monomial standard: one full-torus stratum
    StandardPair p;
    p.eta.assign(n, 0);
    p.sigma.resize(n);
    for (int i = 0; i < n; ++i) p.sigma[i] = i;
    out.push_back(std::move(p));
    return out;
  }
  // generator degree bounds: eta_l <= max_g g_l - 1 for l outside sigma
  Exp dmax(n, 0);
  for (const Exp& g : m.generators())
    for (int i = 0; i < n; ++i) dmax[i] = std::max(dmax[i], g[i]);

  for (const std::vector<int>& sigma : subsets(n)) {
    MonomialIdeal m_sigma = m.saturate_vars(sigma);
    if (m_sigma.is_unit()) continue;
    std::vector<int> outside;
    for (int i = 0; i < n; ++i)
      if (!std::binary_search(sigma.begin(), sigma.end(), i)) outside.push_back(i);
    std::vector<MonomialIdeal> raised;  // saturation by sigma + {l}
    bool dead_direction = false;
    for (int l : outside) {
      std::vector<int> vars = sigma;
      vars.push_back(l);
      raised.push_back(m.saturate_vars(vars));
      if (dmax[l] == 0) dead_direction = true;  // l never enters the ideal
    }
    if (dead_direction) continue;

    // enumerate candidate eta in the bounded box over `outside`
    Exp eta(n, 0);
    std::function<void(size_t)> rec = [&](size_t k) {
      if (k == outside.size()) {
        if (m_sigma.contains(eta)) return;  // stratum meets the ideal
        for (size_t t = 0; t < raised.size(); ++t)
          if (!raised[t].contains(eta)) return;  // raising l never enters
        StandardPair p;
        p.eta = eta;
        p.sigma = sigma;
        out.push_back(std::move(p));
        return;
      }
      int l = outside[k];
      for (long v = 0; v < dmax[l]; ++v) {
        eta[l] = v;
        rec(k + 1);
      }
      eta[l] = 0;
    };
    rec(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int top_pair_count(const std::vector<StandardPair>& pairs, int d) {
  int c = 0;
  for (const StandardPair& p : pairs)
    if (static_cast<int>(p.sigma.size()) == d) ++c;
  return c;
}

std::vector<StandardPair> embedded_pairs(const std::vector<StandardPair>& pairs, int d) {
  std::vector<StandardPair> out;
  for (const StandardPair& p : pairs)
    if (static_cast<int>(p.sigma.size()) != d) out.push_back(p);
  return out;
}

bool standard_pair_polytope_check(const StandardPair& p, const GaleDiagram& b,
                                  const std::vector<Weight>& chain) {
  assert(!chain.empty());
  const int n = b.n();
  Polyhedron2D base;
  for (int i = 0; i < n; ++i) {
    if (std::binary_search(p.sigma.begin(), p.sigma.end(), i)) continue;
    base.add(b.rows[i][0], b.rows[i][1], Rat(p.eta[i]));
  }
  auto weight_normal = [&](const Weight& w) {
    Int a1 = 0, a2 = 0;
    for (int i = 0; i < n; ++i) {
      a1 += Int(w[i]) * b.rows[i][0];
      a2 += Int(w[i]) * b.rows[i][1];
    }
    return std::pair<Int, Int>(a1, a2);
  };
  auto [u1, u2] = weight_normal(chain[0]);

  // piece with w1^T (Bz) >= 1 must have no lattice point
  {
    Polyhedron2D piece = base;
    piece.add(-u1, -u2, Rat(-1));
    if (is_feasible(integer_points_2d(piece))) return false;
  }
  // piece with w1^T (Bz) = 0 (and w2^T (Bz) >= 0 when chained) must be {0}
  {
    Polyhedron2D piece = base;
    piece.add(u1, u2, Rat(0));
    piece.add(-u1, -u2, Rat(0));
    if (chain.size() > 1) {
      auto [w1, w2] = weight_normal(chain[1]);
      piece.add(-w1, -w2, Rat(0));
    }
    return unique_integer_point_is(piece, IntVec{Int(0), Int(0)});
  }
}

std::string to_string(const StandardPair& p) {
  std::ostringstream os;
  os << "(";
  bool any = false;
  for (size_t i = 0; i < p.eta.size(); ++i) {
    if (p.eta[i] == 0) continue;
    if (any) os << "*";
    os << "d" << (i + 1);
    if (p.eta[i] > 1) os << "^" << p.eta[i];
    any = true;
  }
  if (!any) os << "1";
  os << ", {";
  for (size_t i = 0; i < p.sigma.size(); ++i) os << (i ? "," : "") << (p.sigma[i] + 1);
  os << "})";
  return os.str();
}

}  // namespace hypex
