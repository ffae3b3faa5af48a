#include "hypex/volume.hpp"

#include "hypex/fan.hpp"
#include "hypex/standard_pairs.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hypex {

namespace {

// |det| of the edge matrix of a simplex given by point indices
Int simplex_volume(const std::vector<IntVec>& pts, const std::vector<int>& simplex) {
  const int m = static_cast<int>(simplex.size()) - 1;
  RatMat e(m, RatVec(m));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c)
      e[r][c] = Rat(pts[simplex[r + 1]][c] - pts[simplex[0]][c]);
  // exact determinant by elimination
  Rat det = 1;
  for (int c = 0; c < m; ++c) {
    int piv = -1;
    for (int r = c; r < m; ++r)
      if (e[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(e[piv], e[c]);
      det = -det;
    }
    det *= e[c][c];
    for (int r = c + 1; r < m; ++r) {
      Rat f = e[r][c] / e[c][c];
      for (int cc = c; cc < m; ++cc) e[r][cc] -= f * e[c][cc];
    }
  }
  Int val = abs(Int(det.get_num()));
  return val;
}

int affine_rank(const std::vector<IntVec>& pts, const std::vector<int>& idx) {
  if (idx.empty()) return -1;
  RatMat diffs;
  for (size_t k = 1; k < idx.size(); ++k) {
    RatVec row(pts[idx[0]].size());
    for (size_t c = 0; c < row.size(); ++c)
      row[c] = Rat(pts[idx[k]][c] - pts[idx[0]][c]);
    diffs.push_back(std::move(row));
  }
  return diffs.empty() ? 0 : rank(diffs);
}

}  // namespace

Int volume_by_triangulation(const Configuration& a) {
  const int m = a.d() - 1;  // dimension of the projected polytope
  const int n = a.n();
  std::vector<IntVec> pts(n);
  for (int j = 0; j < n; ++j) {
    IntVec col = a.column(j);
    pts[j] = IntVec(col.begin() + 1, col.end());
  }
  if (m == 0) return 1;
  // sort points for a deterministic placing order
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int i, int j) { return pts[i] < pts[j]; });

  // initial affinely independent simplex
  std::vector<int> simplex{order[0]};
  std::vector<bool> used(n, false);
  used[order[0]] = true;
  for (int i : order) {
    if (static_cast<int>(simplex.size()) == m + 1) break;
    if (used[i]) continue;
    std::vector<int> probe = simplex;
    probe.push_back(i);
    if (affine_rank(pts, probe) == static_cast<int>(probe.size()) - 1) {
      simplex = probe;
      used[i] = true;
    }
  }
  if (static_cast<int>(simplex.size()) != m + 1)
    throw std::logic_error("points do not span the expected dimension");

  std::vector<std::vector<int>> tris{simplex};
  RatVec ref(m, Rat(0));  // centroid of the first simplex stays interior
  for (int v : simplex)
    for (int c = 0; c < m; ++c) ref[c] += Rat(pts[v][c]) / Rat(m + 1);

  auto boundary_facets = [&]() {
    std::map<std::vector<int>, int> count;
    for (const auto& t : tris)
      for (size_t drop = 0; drop < t.size(); ++drop) {
        std::vector<int> f;
        for (size_t k = 0; k < t.size(); ++k)
          if (k != drop) f.push_back(t[k]);
        std::sort(f.begin(), f.end());
        count[f]++;
      }
    std::vector<std::vector<int>> out;
    for (const auto& [f, c] : count)
      if (c == 1) out.push_back(f);
    return out;
  };

  // outward-oriented supporting hyperplane of a facet
  auto facet_plane = [&](const std::vector<int>& f) {
    RatMat diffs(m - 1 >= 0 ? m - 1 : 0, RatVec(m));
    for (int k = 1; k < m; ++k)
      for (int c = 0; c < m; ++c) diffs[k - 1][c] = Rat(pts[f[k]][c] - pts[f[0]][c]);
    auto normals = kernel_basis(diffs.empty() ? RatMat(1, RatVec(m, Rat(0))) : diffs);
    RatVec h = normals.front();
    Rat rhs = 0;
    for (int c = 0; c < m; ++c) rhs += h[c] * Rat(pts[f[0]][c]);
    Rat at_ref = 0;
    for (int c = 0; c < m; ++c) at_ref += h[c] * ref[c];
    if (at_ref > rhs) {  // flip so the reference point satisfies h.x <= rhs
      for (auto& x : h) x = -x;
      rhs = -rhs;
    }
    return std::pair<RatVec, Rat>(h, rhs);
  };

  for (int q : order) {
    if (used[q]) continue;
    used[q] = true;
    std::vector<std::vector<int>> fresh;
    for (const auto& f : boundary_facets()) {
      auto [h, rhs] = facet_plane(f);
      Rat at_q = 0;
      for (int c = 0; c < m; ++c) at_q += h[c] * Rat(pts[q][c]);
      if (at_q > rhs) {  // q sees this facet
        std::vector<int> t = f;
        t.push_back(q);
        fresh.push_back(std::move(t));
      }
    }
    for (auto& t : fresh) tris.push_back(std::move(t));
  }

  Int vol = 0;
  for (const auto& t : tris) vol += simplex_volume(pts, t);
  return vol;
}

Int volume_by_standard_pairs(const Configuration& a, unsigned long seed) {
  GaleDiagram b = integer_kernel_basis(a);
  GroebnerBasis gb = lattice_ideal_generators(b);
  Weight zero(a.n(), 0);
  ChainedInitial chained = monomial_initial_by_chain(gb.elements, zero, seed);
  auto pairs = standard_pairs(chained.ideal, a.n());
  return Int(top_pair_count(pairs, a.d()));
}

Int volume(const Configuration& a, unsigned long seed) {
  Int t = volume_by_triangulation(a);
  Int p = volume_by_standard_pairs(a, seed);
  if (t != p)
    throw MethodDisagreement("triangulation gives " + t.get_str() +
                             ", standard pairs give " + p.get_str());
  return t;
}

}  // namespace hypex
