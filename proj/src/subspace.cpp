#include "hypex/subspace.hpp"

#include <algorithm>
#include <sstream>

namespace hypex {

AffineSubspace AffineSubspace::create(RatVec base, std::vector<RatVec> directions) {
  AffineSubspace s;
  const int d = static_cast<int>(base.size());
  RatMat m = std::move(directions);
  std::vector<int> pivots = rref(m);
  s.dirs_.clear();
  for (size_t k = 0; k < pivots.size(); ++k) s.dirs_.push_back(m[k]);
  // reduce the base point: zero its pivot coordinates
  for (size_t k = 0; k < pivots.size(); ++k) {
    Rat f = base[pivots[k]];
    if (f == 0) continue;
    for (int j = 0; j < d; ++j) base[j] -= f * s.dirs_[k][j];
  }
  s.base_ = std::move(base);
  return s;
}

bool AffineSubspace::contains_point(const RatVec& p) const {
  RatVec diff(p.size());
  for (size_t i = 0; i < p.size(); ++i) diff[i] = p[i] - base_[i];
  // reduce against the rref direction rows
  for (const RatVec& dir : dirs_) {
    int pivot = -1;
    for (size_t j = 0; j < dir.size(); ++j)
      if (dir[j] != 0) {
        pivot = static_cast<int>(j);
        break;
      }
    Rat f = diff[pivot] / dir[pivot];
    for (size_t j = 0; j < dir.size(); ++j) diff[j] -= f * dir[j];
  }
  for (const Rat& x : diff)
    if (x != 0) return false;
  return true;
}

bool AffineSubspace::contains(const AffineSubspace& other) const {
  if (!contains_point(other.base_)) return false;
  for (const RatVec& dir : other.dirs_) {
    RatVec shifted(base_.size());
    for (size_t i = 0; i < base_.size(); ++i) shifted[i] = other.base_[i] + dir[i];
    if (!contains_point(shifted)) return false;
  }
  return true;
}

std::optional<AffineSubspace> AffineSubspace::intersect(const AffineSubspace& other) const {
  const int d = ambient_dim();
  const int k1 = dim(), k2 = other.dim();
  // solve base1 + D1^T s = base2 + D2^T t
  RatMat m(d, RatVec(k1 + k2, Rat(0)));
  RatVec rhs(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < k1; ++j) m[i][j] = dirs_[j][i];
    for (int j = 0; j < k2; ++j) m[i][k1 + j] = -other.dirs_[j][i];
    rhs[i] = other.base_[i] - base_[i];
  }
  auto sol = solve(m, rhs);
  if (!sol) return std::nullopt;
  RatVec point = base_;
  for (int j = 0; j < k1; ++j)
    for (int i = 0; i < d; ++i) point[i] += (*sol)[j] * dirs_[j][i];
  // direction space: D1^T s with (s,t) in the kernel of [D1^T | -D2^T]
  std::vector<RatVec> dirs;
  for (const RatVec& kv : kernel_basis(m)) {
    RatVec dir(d, Rat(0));
    for (int j = 0; j < k1; ++j)
      for (int i = 0; i < d; ++i) dir[i] += kv[j] * dirs_[j][i];
    dirs.push_back(std::move(dir));
  }
  return create(std::move(point), std::move(dirs));
}

bool AffineSubspace::operator<(const AffineSubspace& o) const {
  if (dim() != o.dim()) return dim() < o.dim();
  if (base_ != o.base_) return base_ < o.base_;
  return dirs_ < o.dirs_;
}

std::string AffineSubspace::str() const {
  std::ostringstream os;
  auto vec = [&](const RatVec& v) {
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << ")";
  };
  vec(base_);
  const char* params = "stuvw";
  for (size_t k = 0; k < dirs_.size(); ++k) {
    os << " + " << params[k % 5] << "*";
    vec(dirs_[k]);
  }
  return os.str();
}

void SubspaceArrangement::add(AffineSubspace s) { components.push_back(std::move(s)); }

void SubspaceArrangement::finalize() {
  std::sort(components.begin(), components.end());
  components.erase(std::unique(components.begin(), components.end()), components.end());
  std::vector<AffineSubspace> kept;
  for (size_t i = 0; i < components.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < components.size() && !redundant; ++j) {
      if (i == j) continue;
      if (components[j].contains(components[i]) &&
          !(components[i] == components[j] && j > i))
        redundant = true;
    }
    if (!redundant) kept.push_back(components[i]);
  }
  components = std::move(kept);
}

SubspaceArrangement intersect_arrangements(const SubspaceArrangement& x,
                                           const SubspaceArrangement& y) {
  SubspaceArrangement out;
  for (const AffineSubspace& a : x.components)
    for (const AffineSubspace& b : y.components) {
      auto c = a.intersect(b);
      if (c) out.add(std::move(*c));
    }
  out.finalize();
  return out;
}

}  // namespace hypex
