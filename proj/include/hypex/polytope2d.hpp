#pragma once

// Rational polyhedra in the plane given as {z : a.z <= c} with integer
// normals and rational right-hand sides, and exact decisions about
// their integer points (including unbounded polyhedra, by recession
// cone analysis). Strict inequalities are tightened on the integer
// lattice before any feasibility question is asked.

#include "hypex/rational.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace hypex {

struct HalfPlane {
  Int a1, a2;  // integer normal
  Rat c;       // a1*z1 + a2*z2 <= c  (or < c when strict)
  bool strict = false;
};

struct Polyhedron2D {
  std::vector<HalfPlane> halfplanes;

  void add(long a1, long a2, Rat c, bool strict = false) {
    halfplanes.push_back({Int(a1), Int(a2), std::move(c), strict});
  }
  void add(Int a1, Int a2, Rat c, bool strict = false) {
    halfplanes.push_back({std::move(a1), std::move(a2), std::move(c), strict});
  }
};

struct Feasible {
  IntVec point;                      // one integer point
  std::optional<IntVec> ray;         // lattice ray when infinitely many
};
struct Infeasible {};

using IntegerPoints2DResult = std::variant<Feasible, Infeasible>;

IntegerPoints2DResult integer_points_2d(const Polyhedron2D& p);

bool is_feasible(const IntegerPoints2DResult& r);
std::optional<IntVec> feasible_point(const IntegerPoints2DResult& r);
std::optional<IntVec> infinite_ray(const IntegerPoints2DResult& r);

// Exactly one integer point, and it is `point`?
bool unique_integer_point_is(const Polyhedron2D& p, const IntVec& point);

// All integer points; only valid when the polyhedron is bounded
// (throws otherwise). Used by oracles and small enumerations.
std::vector<IntVec> enumerate_integer_points(const Polyhedron2D& p);

}  // namespace hypex
