#include "hypex/linalg.hpp"

#include <cassert>
#include <sstream>

namespace hypex {

std::optional<Rat> parse_rat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Int p(s);
      return Rat(p);
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty()) return std::nullopt;
    Int p(num), q(den);
    if (q == 0) return std::nullopt;
    return make_rat(p, q);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

RatMat to_rat(const IntMat& m) {
  RatMat r(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    r[i].reserve(m[i].size());
    for (const auto& x : m[i]) r[i].emplace_back(x);
  }
  return r;
}

std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Rat inv = m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(const RatMat& m) {
  RatMat c = m;
  return static_cast<int>(rref(c).size());
}

int rank(const IntMat& m) { return rank(to_rat(m)); }

std::optional<RatVec> solve(const RatMat& m, const RatVec& rhs, bool* unique) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  RatMat aug(rows, RatVec(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug[i][j] = m[i][j];
    aug[i][cols] = rhs[i];
  }
  std::vector<int> pivots = rref(aug);
  for (int p : pivots)
    if (p == cols) return std::nullopt;  // pivot in rhs column: inconsistent
  RatVec x(cols, Rat(0));
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][cols];
  if (unique) *unique = (static_cast<int>(pivots.size()) == cols);
  return x;
}

std::vector<RatVec> kernel_basis(const RatMat& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  RatMat c = m;
  std::vector<int> pivots = rref(c);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols, Rat(0));
    v[f] = 1;
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -c[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Int det2(const Int& a, const Int& b, const Int& c, const Int& d) { return a * d - b * c; }

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  const size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  IntMat r(n, IntVec(m, Int(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  const size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  RatMat r(n, RatVec(m, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

IntVec mat_vec(const IntMat& a, const IntVec& x) {
  IntVec r(a.size(), Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) r[i] += a[i][j] * x[j];
  return r;
}

RatVec mat_vec(const RatMat& a, const RatVec& x) {
  RatVec r(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) r[i] += a[i][j] * x[j];
  return r;
}

// Column HNF via integer column operations. Reduction runs left to
// right; pivot rows are chosen top-down. Produces H lower-triangular
// with positive pivots and entries to the left reduced mod the pivot.
static void hnf_columns(IntMat& a, IntMat* u) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  auto colop_combine = [&](int i, int j, const Int& p, const Int& q, const Int& r, const Int& s) {
    // (col_i, col_j) <- (p*col_i + q*col_j, r*col_i + s*col_j)
    for (int k = 0; k < rows; ++k) {
      Int ci = a[k][i], cj = a[k][j];
      a[k][i] = p * ci + q * cj;
      a[k][j] = r * ci + s * cj;
    }
    if (u)
      for (int k = 0; k < cols; ++k) {
        Int ci = (*u)[k][i], cj = (*u)[k][j];
        (*u)[k][i] = p * ci + q * cj;
        (*u)[k][j] = r * ci + s * cj;
      }
  };
  auto negate_col = [&](int i) {
    for (int k = 0; k < rows; ++k) a[k][i] = -a[k][i];
    if (u)
      for (int k = 0; k < cols; ++k) (*u)[k][i] = -(*u)[k][i];
  };
  int pc = 0;
  for (int pr = 0; pr < rows && pc < cols; ++pr) {
    // clear row pr to the right of column pc
    for (int j = pc + 1; j < cols; ++j) {
      if (a[pr][j] == 0) continue;
      if (a[pr][pc] == 0) {
        colop_combine(pc, j, Int(0), Int(1), Int(1), Int(0));  // swap
        continue;
      }
      Int s, t;
      Int g = gcdext(a[pr][pc], a[pr][j], s, t);
      Int x = a[pr][pc] / g, y = a[pr][j] / g;
      // new pc-col = s*pc + t*j (entry g); new j-col = -y*pc + x*j (entry 0)
      colop_combine(pc, j, s, t, -y, x);
    }
    if (a[pr][pc] == 0) continue;  // row has no pivot at/after pc
    if (a[pr][pc] < 0) negate_col(pc);
    // reduce columns to the left of the pivot
    for (int j = 0; j < pc; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a[pr][j].get_mpz_t(), a[pr][pc].get_mpz_t());
      if (q == 0) continue;
      for (int k = 0; k < rows; ++k) a[k][j] -= q * a[k][pc];
      if (u)
        for (int k = 0; k < cols; ++k) (*u)[k][j] -= q * (*u)[k][pc];
    }
    ++pc;
  }
}

IntMat hnf_transform(const IntMat& a, IntMat& u) {
  const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  u.assign(cols, IntVec(cols, Int(0)));
  for (int i = 0; i < cols; ++i) u[i][i] = 1;
  IntMat h = a;
  hnf_columns(h, &u);
  return h;
}

IntMat column_hnf(const IntMat& a) {
  IntMat h = a;
  hnf_columns(h, nullptr);
  return h;
}

}  // namespace hypex
