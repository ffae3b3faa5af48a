#include "hypex/arrangement.hpp"

namespace hypex {

SubspaceArrangement embedded_pair_arrangement(const Configuration& a, const MonomialIdeal& m) {
  SubspaceArrangement arr;
  const int d = a.d();
  std::vector<StandardPair> pairs = standard_pairs(m, a.n());
  for (const StandardPair& p : embedded_pairs(pairs, d)) {
    RatVec base(d, Rat(0));
    for (int i = 0; i < a.n(); ++i)
      for (int r = 0; r < d; ++r) base[r] += Rat(a.entries()[r][i]) * Rat(p.eta[i]);
    std::vector<RatVec> dirs;
    for (int i : p.sigma) {
      RatVec dir(d);
      for (int r = 0; r < d; ++r) dir[r] = Rat(a.entries()[r][i]);
      dirs.push_back(std::move(dir));
    }
    arr.add(AffineSubspace::create(std::move(base), std::move(dirs)));
  }
  arr.finalize();
  return arr;
}

SubspaceArrangement exceptional_arrangement(const Configuration& a, const GroebnerFan& fan) {
  bool first = true;
  SubspaceArrangement acc;
  for (const FanCone& cone : fan.cones) {
    SubspaceArrangement arr = embedded_pair_arrangement(a, cone.ideal);
    if (first) {
      acc = std::move(arr);
      first = false;
    } else {
      acc = intersect_arrangements(acc, arr);
    }
    if (acc.components.empty()) break;  // intersection can only shrink
  }
  return acc;
}

}  // namespace hypex
