#include "hypex/polytope2d.hpp"

#include "hypex/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hypex {

namespace {

struct Constraint {  // a1*z1 + a2*z2 <= c, non-strict, integer normal
  Int a1, a2;
  Rat c;
};

// strict a.z < c on the integer lattice becomes a.z <= c' with
// c' = c-1 for integral c, floor(c) otherwise
std::vector<Constraint> tighten(const Polyhedron2D& p) {
  std::vector<Constraint> out;
  for (const HalfPlane& h : p.halfplanes) {
    Constraint k{h.a1, h.a2, h.c};
    if (h.strict) k.c = is_integer(h.c) ? Rat(h.c - 1) : Rat(floor_rat(h.c));
    if (k.a1 == 0 && k.a2 == 0) {
      if (k.c < 0)  // unsatisfiable; keep so feasibility reports it
        out.push_back(std::move(k));
      continue;  // vacuous constraints would confuse the recession analysis
    }
    out.push_back(std::move(k));
  }
  return out;
}

struct Interval {  // rational interval, possibly unbounded
  std::optional<Rat> lo, hi;
  bool empty = false;
};

void intersect_lower(Interval& iv, const Rat& v) {
  if (!iv.lo || *iv.lo < v) iv.lo = v;
}
void intersect_upper(Interval& iv, const Rat& v) {
  if (!iv.hi || *iv.hi > v) iv.hi = v;
}
bool interval_consistent(Interval& iv) {
  if (iv.lo && iv.hi && *iv.lo > *iv.hi) iv.empty = true;
  return !iv.empty;
}

// z2-interval at fixed z1
Interval slice_z2(const std::vector<Constraint>& cs, const Rat& z1) {
  Interval iv;
  for (const Constraint& k : cs) {
    Rat rest = k.c - Rat(k.a1) * z1;
    if (k.a2 == 0) {
      if (rest < 0) {
        iv.empty = true;
        return iv;
      }
      continue;
    }
    Rat bound = rest / Rat(k.a2);
    if (k.a2 > 0)
      intersect_upper(iv, bound);
    else
      intersect_lower(iv, bound);
  }
  interval_consistent(iv);
  return iv;
}

// Fourier-Motzkin elimination of z2: rational interval for z1.
Interval eliminate_z2(const std::vector<Constraint>& cs) {
  Interval iv;
  std::vector<const Constraint*> lowers, uppers;
  for (const Constraint& k : cs) {
    if (k.a2 > 0)
      uppers.push_back(&k);
    else if (k.a2 < 0)
      lowers.push_back(&k);
    else {  // pure z1 constraint
      if (k.a1 == 0) {
        if (k.c < 0) {
          iv.empty = true;
          return iv;
        }
        continue;
      }
      Rat bound = k.c / Rat(k.a1);
      if (k.a1 > 0)
        intersect_upper(iv, bound);
      else
        intersect_lower(iv, bound);
    }
  }
  for (const Constraint* l : lowers)
    for (const Constraint* u : uppers) {
      // lower (c_l - a_l1 z1)/a_l2 <= upper (c_u - a_u1 z1)/a_u2 becomes
      // (a_u2*a_l1 - a_l2*a_u1) z1 <= a_u2*c_l - a_l2*c_u
      Int alpha = u->a2 * l->a1 - l->a2 * u->a1;
      Rat gamma = Rat(u->a2) * l->c - Rat(l->a2) * u->c;
      if (alpha == 0) {
        if (gamma < 0) {
          iv.empty = true;
          return iv;
        }
        continue;
      }
      Rat bound = gamma / Rat(alpha);
      if (alpha > 0)
        intersect_upper(iv, bound);
      else
        intersect_lower(iv, bound);
    }
  interval_consistent(iv);
  return iv;
}

std::optional<RatVec> rational_point(const std::vector<Constraint>& cs) {
  Interval iv = eliminate_z2(cs);
  if (iv.empty) return std::nullopt;
  Rat z1(0);
  if (iv.lo && z1 < *iv.lo) z1 = *iv.lo;
  if (iv.hi && z1 > *iv.hi) z1 = *iv.hi;
  Interval s = slice_z2(cs, z1);
  if (s.empty) return std::nullopt;  // cannot happen after valid elimination
  Rat z2(0);
  if (s.lo && z2 < *s.lo) z2 = *s.lo;
  if (s.hi && z2 > *s.hi) z2 = *s.hi;
  return RatVec{z1, z2};
}

IntVec primitive(Int x, Int y) {
  Int g = gcd(abs(x), abs(y));
  if (g == 0) return {Int(0), Int(0)};
  return {x / g, y / g};
}

// nonzero lattice directions of the recession cone boundary
std::vector<IntVec> recession_candidates(const std::vector<Constraint>& cs) {
  std::vector<IntVec> cands;
  for (const Constraint& k : cs) {
    cands.push_back(primitive(-k.a2, k.a1));
    cands.push_back(primitive(k.a2, -k.a1));
  }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  std::vector<IntVec> out;
  for (auto& c : cands)
    if (!(c[0] == 0 && c[1] == 0)) out.push_back(c);
  return out;
}

bool in_recession(const std::vector<Constraint>& cs, const IntVec& r) {
  for (const Constraint& k : cs)
    if (k.a1 * r[0] + k.a2 * r[1] > 0) return false;
  return true;
}

bool in_recession_strict(const std::vector<Constraint>& cs, const IntVec& r) {
  for (const Constraint& k : cs)
    if (k.a1 * r[0] + k.a2 * r[1] >= 0) return false;
  return true;
}

// integer z1 in [ceil(lo), floor(hi)], choosing the value closest to 0
std::optional<Int> integer_in(const Interval& iv) {
  if (iv.empty) return std::nullopt;
  std::optional<Int> lo, hi;
  if (iv.lo) lo = ceil_rat(*iv.lo);
  if (iv.hi) hi = floor_rat(*iv.hi);
  if (lo && hi && *lo > *hi) return std::nullopt;
  if (!lo && !hi) return Int(0);
  if (!lo) return *hi >= 0 ? Int(0) : *hi;
  if (!hi) return *lo <= 0 ? Int(0) : *lo;
  if (*lo <= 0 && 0 <= *hi) return Int(0);
  return *lo > 0 ? *lo : *hi;
}

// unimodular U with first column r (r primitive); z = U z'
IntMat unimodular_with_first_column(const IntVec& r) {
  Int s, t;
  Int g = gcdext(r[0], r[1], s, t);
  assert(g == 1 || g == -1);
  if (g == -1) {
    s = -s;
    t = -t;
  }
  // det = r0*s2 - r1*s1 = 1 with second column (-t, s)
  return IntMat{{r[0], -t}, {r[1], s}};
}

std::vector<Constraint> transform(const std::vector<Constraint>& cs, const IntMat& u) {
  // z = U z'  =>  normal a becomes a U (row times matrix)
  std::vector<Constraint> out;
  for (const Constraint& k : cs) {
    Constraint t;
    t.a1 = k.a1 * u[0][0] + k.a2 * u[1][0];
    t.a2 = k.a1 * u[0][1] + k.a2 * u[1][1];
    t.c = k.c;
    out.push_back(std::move(t));
  }
  return out;
}

// search along integer slices z1 = const, z2 within rational interval
std::optional<IntVec> scan_bounded(const std::vector<Constraint>& cs, const Int& from,
                                   const Int& to) {
  for (Int x = from; x <= to; ++x) {
    Interval s = slice_z2(cs, Rat(x));
    auto y = integer_in(s);
    if (y) return IntVec{x, *y};
  }
  return std::nullopt;
}

}  // namespace

IntegerPoints2DResult integer_points_2d(const Polyhedron2D& p) {
  std::vector<Constraint> cs = tighten(p);

  if (cs.empty()) return Feasible{{Int(0), Int(0)}, IntVec{Int(1), Int(0)}};

  auto rp = rational_point(cs);
  if (!rp) return Infeasible{};

  std::vector<IntVec> cands = recession_candidates(cs);
  std::vector<IntVec> rays;
  for (const IntVec& r : cands)
    if (in_recession(cs, r)) rays.push_back(r);

  if (rays.empty()) {
    // bounded: z1-range from Fourier-Motzkin is finite
    Interval iv = eliminate_z2(cs);
    assert(iv.lo && iv.hi);
    auto pt = scan_bounded(cs, ceil_rat(*iv.lo), floor_rat(*iv.hi));
    if (!pt) return Infeasible{};
    return Feasible{*pt, std::nullopt};
  }

  // recession cone is full-dimensional when some direction is strictly
  // interior; then integer points surely exist: walk far from a rational
  // feasible point along the interior direction and round
  std::vector<IntVec> interior_cands = rays;
  for (size_t i = 0; i < rays.size(); ++i)
    for (size_t j = i + 1; j < rays.size(); ++j)
      interior_cands.push_back(IntVec{rays[i][0] + rays[j][0], rays[i][1] + rays[j][1]});
  for (const Constraint& k : cs) interior_cands.push_back(primitive(-k.a1, -k.a2));
  for (const IntVec& r : interior_cands) {
    if (r[0] == 0 && r[1] == 0) continue;
    if (!in_recession_strict(cs, r)) continue;
    // choose t so that every constraint has slack >= |a1|+|a2| at p0+t*r
    Int t = 0;
    for (const Constraint& k : cs) {
      Rat lhs = Rat(k.a1) * (*rp)[0] + Rat(k.a2) * (*rp)[1];
      Int drop = -(k.a1 * r[0] + k.a2 * r[1]);  // >= 1
      Int margin = abs(k.a1);
      margin += abs(k.a2);
      Rat need = (lhs - k.c + Rat(margin)) / Rat(drop);
      Int tk = ceil_rat(need);
      if (tk > t) t = tk;
    }
    IntVec z{floor_rat(Rat((*rp)[0]) + Rat(t) * Rat(r[0])),
             floor_rat(Rat((*rp)[1]) + Rat(t) * Rat(r[1]))};
    // rounding moved each coordinate by < 1, covered by the slack margin
    IntVec prim = primitive(r[0], r[1]);
    return Feasible{z, prim};
  }

  // one-dimensional recession: send a ray to (1,0) and scan the bounded
  // transverse coordinate
  IntMat u = unimodular_with_first_column(rays.front());
  std::vector<Constraint> tc = transform(cs, u);
  // swap coordinates so the unbounded direction is z2, then slices over
  // z1 are the bounded ones
  for (Constraint& k : tc) std::swap(k.a1, k.a2);
  Interval yr = eliminate_z2(tc);
  if (yr.empty) return Infeasible{};
  assert(yr.lo && yr.hi);  // transverse direction must be bounded
  auto found = scan_bounded(tc, ceil_rat(*yr.lo), floor_rat(*yr.hi));
  if (!found) return Infeasible{};
  // map back: transformed point is (y, x') with original z = U*(x', y)
  IntVec zprime{(*found)[1], (*found)[0]};
  IntVec z{u[0][0] * zprime[0] + u[0][1] * zprime[1],
           u[1][0] * zprime[0] + u[1][1] * zprime[1]};
  return Feasible{z, rays.front()};
}

bool is_feasible(const IntegerPoints2DResult& r) {
  return std::holds_alternative<Feasible>(r);
}

std::optional<IntVec> feasible_point(const IntegerPoints2DResult& r) {
  if (auto* f = std::get_if<Feasible>(&r)) return f->point;
  return std::nullopt;
}

std::optional<IntVec> infinite_ray(const IntegerPoints2DResult& r) {
  if (auto* f = std::get_if<Feasible>(&r)) return f->ray;
  return std::nullopt;
}

bool unique_integer_point_is(const Polyhedron2D& p, const IntVec& point) {
  auto res = integer_points_2d(p);
  auto z = feasible_point(res);
  if (!z) return false;
  if (infinite_ray(res)) return false;
  // exclude `point` by four half-plane splits; any remaining integer
  // point disproves uniqueness
  auto check = [&](long a1, long a2, Rat c, bool eq1, Rat e1) {
    Polyhedron2D q = p;
    if (eq1) {
      q.add(1, 0, e1);
      q.add(-1, 0, -e1);
    }
    q.add(a1, a2, std::move(c));
    return is_feasible(integer_points_2d(q));
  };
  Rat x(point[0]), y(point[1]);
  if (check(1, 0, x - 1, false, Rat(0))) return false;
  if (check(-1, 0, -x - 1, false, Rat(0))) return false;
  if (check(0, 1, y - 1, true, x)) return false;
  if (check(0, -1, -y - 1, true, x)) return false;
  return *z == point;
}

std::vector<IntVec> enumerate_integer_points(const Polyhedron2D& p) {
  std::vector<Constraint> cs = tighten(p);
  std::vector<IntVec> cands = recession_candidates(cs);
  for (const IntVec& r : cands)
    if (in_recession(cs, r)) throw std::invalid_argument("polyhedron is unbounded");
  if (cs.empty()) throw std::invalid_argument("polyhedron is unbounded");
  Interval iv = eliminate_z2(cs);
  std::vector<IntVec> pts;
  if (iv.empty) return pts;
  for (Int x = ceil_rat(*iv.lo); x <= floor_rat(*iv.hi); ++x) {
    Interval s = slice_z2(cs, Rat(x));
    if (s.empty) continue;
    if (!s.lo || !s.hi) throw std::invalid_argument("polyhedron is unbounded");
    for (Int y = ceil_rat(*s.lo); y <= floor_rat(*s.hi); ++y) pts.push_back(IntVec{x, y});
  }
  return pts;
}

}  // namespace hypex
