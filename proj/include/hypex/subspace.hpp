#pragma once

// Affine subspaces of Q^d in a canonical form (reduced echelon
// direction basis, base point reduced modulo the directions), so that
// equality, containment and intersection are exact.

#include "hypex/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hypex {

class AffineSubspace {
 public:
  static AffineSubspace create(RatVec base, std::vector<RatVec> directions);

  const RatVec& base() const { return base_; }
  const std::vector<RatVec>& directions() const { return dirs_; }
  int dim() const { return static_cast<int>(dirs_.size()); }
  int ambient_dim() const { return static_cast<int>(base_.size()); }

  bool contains_point(const RatVec& p) const;
  bool contains(const AffineSubspace& other) const;  // other subseteq this
  std::optional<AffineSubspace> intersect(const AffineSubspace& other) const;

  bool operator==(const AffineSubspace& o) const {
    return base_ == o.base_ && dirs_ == o.dirs_;
  }
  bool operator<(const AffineSubspace& o) const;

  std::string str() const;  // "(1,0,-1) + s*(1,0,-2)" style

 private:
  RatVec base_;
  std::vector<RatVec> dirs_;  // rref rows, no zero rows
};

struct SubspaceArrangement {
  std::vector<AffineSubspace> components;  // canonical, sorted, irredundant

  // inserts, then drops components contained in another
  void add(AffineSubspace s);
  void finalize();  // sort + dedupe + redundancy removal
  bool operator==(const SubspaceArrangement& o) const { return components == o.components; }
};

// union-of-components intersection: every pairwise intersection, made
// irredundant
SubspaceArrangement intersect_arrangements(const SubspaceArrangement& x,
                                           const SubspaceArrangement& y);

}  // namespace hypex
