#pragma once

// Normalized volume of conv(A): computed two independent ways that
// must agree - a placing triangulation of the projected point set in
// exact rational arithmetic, and the top standard-pair count of a
// monomial initial ideal.

#include "hypex/config.hpp"

#include <stdexcept>

namespace hypex {

struct MethodDisagreement : std::runtime_error {
  explicit MethodDisagreement(const std::string& w) : std::runtime_error(w) {}
};

// normalized volume by beneath-beyond triangulation of the columns
// with the degree row dropped
Int volume_by_triangulation(const Configuration& a);

// normalized volume as the top standard-pair count of the initial
// ideal selected by a seeded generic weight
Int volume_by_standard_pairs(const Configuration& a, unsigned long seed = 0);

// both routes, with agreement enforced
Int volume(const Configuration& a, unsigned long seed = 0);

}  // namespace hypex
