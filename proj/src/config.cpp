#include "hypex/config.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>

namespace hypex {

Configuration Configuration::create(IntMat entries) {
  if (entries.empty() || entries[0].empty()) throw ConfigError("empty matrix", "shape");
  const int d = static_cast<int>(entries.size());
  const int n = static_cast<int>(entries[0].size());
  for (const auto& row : entries)
    if (static_cast<int>(row.size()) != n) throw ConfigError("ragged matrix", "shape");
  for (int j = 0; j < n; ++j)
    if (entries[0][j] != 1)
      throw ConfigError("first row must be all ones", "first-row-ones");
  if (n - d != 2) throw ConfigError("configuration must have n - d = 2", "codim");
  if (rank(entries) != d) throw ConfigError("matrix must have rank d", "rank");
  // columns must generate Z^d: gcd of all maximal minors is 1.
  // Equivalently the column HNF of A is [I | 0] up to column order; we
  // check via the d x d pivot determinant gcd.
  {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    Int g = 0;
    std::vector<int> comb(d);
    std::function<void(int, int)> rec = [&](int start, int k) {
      if (g == 1) return;
      if (k == d) {
        RatMat sub(d, RatVec(d));
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) sub[i][j] = Rat(entries[i][comb[j]]);
        // integer determinant via fraction-free expansion is overkill here;
        // compute through rational elimination and take the numerator.
        Rat det = 1;
        RatMat m = sub;
        bool singular = false;
        for (int c = 0; c < d && !singular; ++c) {
          int piv = -1;
          for (int r = c; r < d; ++r)
            if (m[r][c] != 0) {
              piv = r;
              break;
            }
          if (piv < 0) {
            singular = true;
            break;
          }
          if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
          }
          det *= m[c][c];
          for (int r = c + 1; r < d; ++r) {
            Rat f = m[r][c] / m[c][c];
            for (int cc = c; cc < d; ++cc) m[r][cc] -= f * m[c][cc];
          }
        }
        if (!singular) {
          Int dz = abs(Int(det.get_num()));  // det of an integer matrix is an integer
          g = g == 0 ? dz : gcd(g, dz);
        }
        return;
      }
      for (int i = start; i <= n - (d - k); ++i) {
        comb[k] = i;
        rec(i + 1, k + 1);
      }
    };
    rec(0, 0);
    if (g != 1) throw ConfigError("columns must generate Z^d as a lattice", "lattice-span");
  }
  return Configuration(std::move(entries), d, n);
}

IntVec Configuration::column(int j) const {
  IntVec c(d_);
  for (int i = 0; i < d_; ++i) c[i] = entries_[i][j];
  return c;
}

Configuration Configuration::permuted(const std::vector<int>& perm) const {
  IntMat e(d_, IntVec(n_));
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < n_; ++j) e[i][j] = entries_[i][perm[j]];
  return Configuration(std::move(e), d_, n_);
}

IntVec GaleDiagram::apply(const IntVec& z) const {
  IntVec r(rows.size(), Int(0));
  for (size_t i = 0; i < rows.size(); ++i) r[i] = rows[i][0] * z[0] + rows[i][1] * z[1];
  return r;
}

std::optional<IntVec> GaleDiagram::coordinates(const IntVec& w) const {
  // find two independent rows, solve, then verify all rows
  const int n = static_cast<int>(rows.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Int det = det2(rows[i][0], rows[i][1], rows[j][0], rows[j][1]);
      if (det == 0) continue;
      Int num1 = w[i] * rows[j][1] - w[j] * rows[i][1];
      Int num2 = rows[i][0] * w[j] - rows[j][0] * w[i];
      if (num1 % det != 0 || num2 % det != 0) return std::nullopt;
      IntVec z{num1 / det, num2 / det};
      IntVec img = apply(z);
      for (int k = 0; k < n; ++k)
        if (img[k] != w[k]) return std::nullopt;
      return z;
    }
  return std::nullopt;
}

GaleDiagram integer_kernel_basis(const Configuration& a) {
  const int n = a.n(), d = a.d();
  IntMat u;
  IntMat h = hnf_transform(a.entries(), u);
  // kernel = columns of U whose image column in H is zero
  std::vector<int> zero_cols;
  for (int j = 0; j < n; ++j) {
    bool zero = true;
    for (int i = 0; i < d && zero; ++i) zero = (h[i][j] == 0);
    if (zero) zero_cols.push_back(j);
  }
  if (static_cast<int>(zero_cols.size()) != 2)
    throw ConfigError("kernel rank is not 2", "codim");
  IntMat b(n, IntVec(2));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < 2; ++k) b[i][k] = u[i][zero_cols[k]];
  // canonicalize the basis via column HNF of the n x 2 kernel matrix
  b = column_hnf(b);
  GaleDiagram g;
  g.rows = std::move(b);
  g.provenance.resize(n);
  std::iota(g.provenance.begin(), g.provenance.end(), 0);
  return g;
}

bool is_valid_gale(const Configuration& a, const GaleDiagram& b) {
  if (b.n() != a.n()) return false;
  for (int k = 0; k < 2; ++k) {
    IntVec col = b.column(k);
    IntVec img = mat_vec(a.entries(), col);
    for (const auto& x : img)
      if (x != 0) return false;
  }
  Int g = 0;
  for (int i = 0; i < b.n(); ++i)
    for (int j = i + 1; j < b.n(); ++j) {
      Int m = abs(det2(b.rows[i][0], b.rows[i][1], b.rows[j][0], b.rows[j][1]));
      g = (g == 0) ? m : gcd(g, m);
      if (g == 1) return true;
    }
  return g == 1;
}

namespace {

int open_quadrant(const Int& x, const Int& y) {
  if (x > 0 && y > 0) return 1;
  if (x < 0 && y > 0) return 2;
  if (x < 0 && y < 0) return 3;
  if (x > 0 && y < 0) return 4;
  return 0;  // on an axis
}

// rows 2 and 4 (0-based 1 and 3) independent: cone {z : b2.z>=0, b4.z>=0}
// contained in the closed first quadrant?
bool cone_in_first_quadrant(const IntVec& b2, const IntVec& b4) {
  auto edge = [](const IntVec& tight, const IntVec& other) -> IntVec {
    IntVec e{-tight[1], tight[0]};
    Int s = other[0] * e[0] + other[1] * e[1];
    if (s < 0) {
      e[0] = -e[0];
      e[1] = -e[1];
    }
    return e;
  };
  IntVec e1 = edge(b2, b4);
  IntVec e2 = edge(b4, b2);
  return e1[0] >= 0 && e1[1] >= 0 && e2[0] >= 0 && e2[1] >= 0;
}

// Value sequence 1, 0, -1, 2, -2, ... used to enumerate unimodular
// transforms deterministically (identity first within max-norm 1).
std::vector<long> digit_sequence(long bound) {
  std::vector<long> s{1, 0, -1};
  for (long v = 2; v <= bound; ++v) {
    s.push_back(v);
    s.push_back(-v);
  }
  return s;
}

struct QuadrantHit {
  IntMat transform;          // the unimodular V
  std::vector<int> slot_row; // slot_row[q] = row index landing in quadrant q+1
};

// Enumerates unimodular V (increasing max-norm shells, fixed digit order)
// until the transformed rows meet all four open quadrants. on_hit may
// reject a candidate (e.g. cone condition) to continue the search.
template <typename OnHit>
bool search_quadrant_transforms(const IntMat& rows, long bound, OnHit on_hit) {
  const int n = static_cast<int>(rows.size());
  for (long shell = 1; shell <= bound; ++shell) {
    std::vector<long> digits = digit_sequence(shell);
    for (long a : digits)
      for (long b : digits)
        for (long c : digits)
          for (long d : digits) {
            long mx = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
            if (mx != shell) continue;  // previous shells already visited
            long det = a * d - b * c;
            if (det != 1 && det != -1) continue;
            std::vector<int> slot_row(4, -1);
            bool ok = true;
            for (int i = 0; i < n; ++i) {
              Int x = rows[i][0] * a + rows[i][1] * c;
              Int y = rows[i][0] * b + rows[i][1] * d;
              int q = open_quadrant(x, y);
              if (q > 0 && slot_row[q - 1] < 0) slot_row[q - 1] = i;
            }
            for (int q = 0; q < 4; ++q) ok = ok && slot_row[q] >= 0;
            if (!ok) continue;
            QuadrantHit hit;
            hit.transform = IntMat{{Int(a), Int(b)}, {Int(c), Int(d)}};
            hit.slot_row = slot_row;
            if (on_hit(hit, rows)) return true;
          }
  }
  return false;
}

long default_bound(const IntMat& rows) {
  Int mx = 1;
  for (const auto& r : rows)
    for (const auto& x : r) {
      Int a = abs(x);
      if (a > mx) mx = a;
    }
  Int b = 10 * mx;
  return b.fits_slong_p() ? b.get_si() : 1000000L;
}

// Exhaustive existence sweep in 64-bit arithmetic: unimodular pairs are
// enumerated as a primitive first column u plus the line of partner
// columns v with det(u,v) = +-1, which keeps the sweep near O(bound^2)
// instead of bound^4. Returns the first witness in this order, if any.
std::optional<IntMat> find_quadrant_transform(const IntMat& rows, long bound) {
  const int n = static_cast<int>(rows.size());
  std::vector<std::array<long, 2>> r(n);
  for (int i = 0; i < n; ++i) {
    assert(rows[i][0].fits_slong_p() && rows[i][1].fits_slong_p());
    r[i] = {rows[i][0].get_si(), rows[i][1].get_si()};
  }
  auto meets_all = [&](long a, long c, long b, long d) {
    bool q1 = false, q2 = false, q3 = false, q4 = false;
    for (int i = 0; i < n; ++i) {
      long x = r[i][0] * a + r[i][1] * c;
      long y = r[i][0] * b + r[i][1] * d;
      if (x > 0 && y > 0) q1 = true;
      else if (x < 0 && y > 0) q2 = true;
      else if (x < 0 && y < 0) q3 = true;
      else if (x > 0 && y < 0) q4 = true;
      if (q1 && q2 && q3 && q4) return true;
    }
    return false;
  };
  for (long shell = 1; shell <= bound; ++shell)
    for (long a = -shell; a <= shell; ++a)
      for (long c = -shell; c <= shell; ++c) {
        if (std::max(std::abs(a), std::abs(c)) != shell) continue;
        if (std::gcd(std::abs(a), std::abs(c)) != 1) continue;
        // all v with a*d - c*b = 1 form the line (b0,d0) + t*(a,c)
        long g, b0, d0;
        {
          Int s, t;
          Int gg = gcdext(Int(a), Int(c), s, t);
          g = gg.get_si();
          // a*s + c*t = 1  =>  det(u, (-t, s)) = a*s - c*(-t) = 1
          d0 = s.get_si() * (g == 1 ? 1 : -1);
          b0 = -t.get_si() * (g == 1 ? 1 : -1);
        }
        long step = std::max(std::abs(a), std::abs(c));
        long tmax = bound / step + 2;
        for (long t = -tmax; t <= tmax; ++t)
          for (int sign : {1, -1}) {
            long b = sign * (b0 + t * a);
            long d = sign * (d0 + t * c);
            if (std::max(std::abs(b), std::abs(d)) > bound) continue;
            if (meets_all(a, c, b, d))
              return IntMat{{Int(a), Int(b)}, {Int(c), Int(d)}};
          }
      }
  return std::nullopt;
}

}  // namespace

NormalizedGale gale_normalize(const GaleDiagram& b, long search_bound) {
  const int n = b.n();
  long bound = search_bound > 0 ? search_bound : default_bound(b.rows);
  // fast existence sweep first: a hit guarantees the calibrated search
  // below terminates within the same max-norm shell (the sign flip and
  // row exchange that fix the cone condition do not change the norm)
  if (!find_quadrant_transform(b.rows, bound))
    throw NormalizationImpossible(
        "no unimodular transform meets the four open quadrants within bound " +
        std::to_string(bound));
  NormalizedGale out;
  bool found = false;

  // The quadrant slots fix which four rows go first; remaining rows keep
  // their original relative order. Within one transform several rows may
  // share a quadrant, so enumerate choices per slot lexicographically.
  auto try_hit = [&](const QuadrantHit& hit, const IntMat& rows) -> bool {
    const IntMat& v = hit.transform;
    IntMat img(n, IntVec(2));
    for (int i = 0; i < n; ++i) {
      img[i][0] = rows[i][0] * v[0][0] + rows[i][1] * v[1][0];
      img[i][1] = rows[i][0] * v[0][1] + rows[i][1] * v[1][1];
    }
    std::vector<std::vector<int>> per_quadrant(4);
    for (int i = 0; i < n; ++i) {
      int q = open_quadrant(img[i][0], img[i][1]);
      if (q > 0) per_quadrant[q - 1].push_back(i);
    }
    // lexicographic over (row for Q1, row for Q2, row for Q3, row for Q4)
    for (int r1 : per_quadrant[0])
      for (int r2 : per_quadrant[1])
        for (int r3 : per_quadrant[2])
          for (int r4 : per_quadrant[3]) {
            if (r2 == r1 || r3 == r1 || r3 == r2 || r4 == r1 || r4 == r2 || r4 == r3) continue;
            IntVec row2 = img[r2], row4 = img[r4];
            Int indep = det2(row2[0], row2[1], row4[0], row4[1]);
            if (indep != 0 && !cone_in_first_quadrant(row2, row4)) continue;
            std::vector<int> order{r1, r2, r3, r4};
            for (int i = 0; i < n; ++i)
              if (i != r1 && i != r2 && i != r3 && i != r4) order.push_back(i);
            out.gale.rows.resize(n);
            for (int i = 0; i < n; ++i) out.gale.rows[i] = img[order[i]];
            out.gale.provenance = order;
            out.column_order = order;
            out.transform = v;
            found = true;
            return true;
          }
    return false;
  };

  search_quadrant_transforms(b.rows, bound, try_hit);
  if (!found)
    throw NormalizationImpossible(
        "no unimodular transform meets the four open quadrants within bound " +
        std::to_string(bound));
  return out;
}

CohenMacaulayResult is_cohen_macaulay_codim2(const Configuration& a, long search_bound) {
  GaleDiagram b = integer_kernel_basis(a);
  long bound = search_bound > 0 ? search_bound : default_bound(b.rows);
  CohenMacaulayResult res;
  res.bound_used = bound;
  auto witness = find_quadrant_transform(b.rows, bound);
  if (witness) {
    res.is_cm = false;
    res.witness_transform = std::move(*witness);
  }
  res.search_exhausted = !witness;
  return res;
}

ParamSolveResult param_solve(const Configuration& a, const std::map<int, Rat>& fixed,
                             const ParamVector& beta) {
  const int d = a.d(), n = a.n();
  std::vector<int> free_idx;
  for (int j = 0; j < n; ++j)
    if (!fixed.count(j)) free_idx.push_back(j);
  // rhs = beta - A_fixed * fixed_values, as affine forms
  ParamVector rhs = beta;
  for (const auto& [j, val] : fixed)
    for (int i = 0; i < d; ++i) rhs[i] -= AffineForm(Rat(a.entries()[i][j]) * val);
  // eliminate on [A_free | rhs] with rational pivots
  const int m = static_cast<int>(free_idx.size());
  RatMat lhs(d, RatVec(m));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < m; ++k) lhs[i][k] = Rat(a.entries()[i][free_idx[k]]);
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m && r < d; ++c) {
    int piv = -1;
    for (int i = r; i < d; ++i)
      if (lhs[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(lhs[r], lhs[piv]);
    std::swap(rhs[r], rhs[piv]);
    Rat inv = lhs[r][c];
    for (int j = c; j < m; ++j) lhs[r][j] /= inv;
    rhs[r] *= Rat(1) / inv;
    for (int i = 0; i < d; ++i) {
      if (i == r || lhs[i][c] == 0) continue;
      Rat f = lhs[i][c];
      for (int j = c; j < m; ++j) lhs[i][j] -= f * lhs[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivots.push_back(c);
    ++r;
  }
  for (int i = r; i < d; ++i)
    if (!rhs[i].is_zero()) return {SolveStatus::NoSolution, {}};
  if (static_cast<int>(pivots.size()) < m) return {SolveStatus::NonUnique, {}};
  ParamVector u(n);
  for (const auto& [j, val] : fixed) u[j] = AffineForm(val);
  for (size_t k = 0; k < pivots.size(); ++k) u[free_idx[pivots[k]]] = rhs[k];
  return {SolveStatus::Unique, std::move(u)};
}

}  // namespace hypex
