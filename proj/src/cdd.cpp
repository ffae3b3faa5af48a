#include "hypex/cdd.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hypex {

namespace {

constexpr long kInf = std::numeric_limits<long>::max() / 4;

// minimum number of summands from `coins` reaching every value <= cap
std::vector<long> min_summands(const std::vector<long>& coins, long cap) {
  std::vector<long> dp(cap + 1, kInf);
  dp[0] = 0;
  for (long x = 1; x <= cap; ++x)
    for (long c : coins)
      if (c <= x && dp[x - c] < kInf) dp[x] = std::min(dp[x], dp[x - c] + 1);
  return dp;
}

// per-residue minima of the monoid generated by `gens` modulo m
// (shortest nonnegative representative of each class)
std::vector<long> residue_minima(const std::vector<long>& gens, long m) {
  std::vector<long> best(m, kInf);
  best[0] = 0;
  // Dijkstra-style relaxation on Z/m with additive edges
  std::vector<bool> done(m, false);
  for (int it = 0; it < m; ++it) {
    long u = -1, bv = kInf;
    for (long r = 0; r < m; ++r)
      if (!done[r] && best[r] < bv) {
        bv = best[r];
        u = r;
      }
    if (u < 0) break;
    done[u] = true;
    for (long g : gens) {
      long v = (u + g) % m;
      if (best[u] + g < best[v]) best[v] = best[u] + g;
    }
  }
  return best;
}

}  // namespace

CurveConfig CurveConfig::create(const std::vector<long>& second_row) {
  if (second_row.size() < 2) throw std::invalid_argument("need at least two columns");
  CurveConfig c{second_row};
  if (c.a.front() != 0) throw std::invalid_argument("first entry must be 0");
  long g = 0;
  for (size_t i = 1; i < c.a.size(); ++i) {
    if (c.a[i] <= c.a[i - 1]) throw std::invalid_argument("entries must increase strictly");
    g = std::gcd(g, c.a[i]);
  }
  if (g != 1) throw std::invalid_argument("entries must generate Z");
  return c;
}

bool semigroup_member_d2(const CurveConfig& c, long b1, long b2) {
  if (b1 < 0 || b2 < 0) return false;
  if (b2 > c.an() * b1) return false;
  std::vector<long> coins(c.a.begin() + 1, c.a.end());
  std::vector<long> dp = min_summands(coins, b2);
  return dp[b2] <= b1;
}

namespace {

struct CddTables {
  std::vector<long> excess_min;   // e(y_r): minimal excess at the class minimum
  std::vector<long> class_min;    // y_r: minimal monoid element per residue
  std::vector<long> mirror_min;   // mu2(r): minimal mirrored-monoid element
  long an;
};

// excess of y: min over representations y = sum coins of
// sum (an - coin); nonincreasing along y -> y + an
std::vector<long> excess_table(const CurveConfig& c, long cap) {
  std::vector<long> dp(cap + 1, kInf);
  dp[0] = 0;
  for (long x = 1; x <= cap; ++x)
    for (size_t i = 1; i < c.a.size(); ++i) {
      long coin = c.a[i];
      if (coin <= x && dp[x - coin] < kInf)
        dp[x] = std::min(dp[x], dp[x - coin] + (c.an() - coin));
    }
  return dp;
}

CddTables build_tables(const CurveConfig& c) {
  CddTables t;
  t.an = c.an();
  std::vector<long> coins(c.a.begin() + 1, c.a.end());
  t.class_min = residue_minima(coins, t.an);
  std::vector<long> mirror;
  for (size_t i = 0; i + 1 < c.a.size(); ++i) mirror.push_back(t.an - c.a[i]);
  t.mirror_min = residue_minima(mirror, t.an);
  return t;
}

}  // namespace

bool cdd_exceptional_member(const CurveConfig& c, long b1, long b2) {
  // beta in NA + Z(1,0) iff b2 lies in the monoid <a2..an>;
  // beta in NA + Z(1,an) iff an*b1 - b2 lies in the mirrored monoid
  if (b2 < 0) return false;
  long cprime = c.an() * b1 - b2;
  if (cprime < 0) return false;
  std::vector<long> coins(c.a.begin() + 1, c.a.end());
  std::vector<long> dp = min_summands(coins, b2);
  if (dp[b2] >= kInf) return false;  // not in the first shifted set
  std::vector<long> mirror;
  for (size_t i = 0; i + 1 < c.a.size(); ++i) mirror.push_back(c.an() - c.a[i]);
  std::vector<long> mdp = min_summands(mirror, cprime);
  if (mdp[cprime] >= kInf) return false;  // not in the second shifted set
  return dp[b2] > b1;  // outside NA itself
}

std::vector<std::pair<long, long>> cdd_exceptional_set(const CurveConfig& c) {
  // members at level y = b2 exist iff the minimal summand count exceeds
  // ceil(y/an) far enough to leave room for the mirrored membership:
  //   exists b1 in [ceil(y/an), delta(y)-1] with an*b1 - y in the
  //   mirrored monoid.
  // The excess e(y) = an*delta(y) - y is nonincreasing along
  // y -> y + an, and the monoid meets each residue class in an
  // arithmetic ray, so scanning stabilizes per class.
  CddTables t = build_tables(c);
  const long an = t.an;
  std::vector<std::pair<long, long>> out;
  std::vector<long> coins(c.a.begin() + 1, c.a.end());
  std::vector<long> mirror;
  for (size_t i = 0; i + 1 < c.a.size(); ++i) mirror.push_back(an - c.a[i]);

  for (long r = 0; r < an; ++r) {
    if (t.class_min[r] >= kInf) continue;  // class not met by the monoid
    long mu = t.mirror_min[((an - (r % an)) % an)];
    if (mu >= kInf) continue;
    // walk y through the class until the excess drops below the bar
    long y = t.class_min[r];
    while (true) {
      std::vector<long> dp = min_summands(coins, y);
      long delta = dp[y];
      long excess = an * delta - y;
      if (excess < mu + an) break;  // nonincreasing: no later y qualifies
      // enumerate the b1 window at this level
      long lo = (y + an - 1) / an;
      std::vector<long> mdp = min_summands(mirror, an * (delta - 1) - y >= 0
                                                       ? an * (delta - 1) - y
                                                       : 0);
      for (long b1 = lo; b1 <= delta - 1; ++b1) {
        long cp = an * b1 - y;
        if (cp >= 0 && mdp[cp] < kInf) out.emplace_back(b1, y);
      }
      y += an;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hypex
