#pragma once

// The containing arrangement of the exceptional set: for each monomial
// initial ideal, the union over its embedded standard pairs of the
// affine spans A(eta + span{e_i : i in sigma}); the final arrangement
// is the intersection of those unions over the whole fan, in canonical
// irredundant form.

#include "hypex/config.hpp"
#include "hypex/fan.hpp"
#include "hypex/standard_pairs.hpp"
#include "hypex/subspace.hpp"

namespace hypex {

// arrangement of a single initial ideal
SubspaceArrangement embedded_pair_arrangement(const Configuration& a, const MonomialIdeal& m);

// intersection over every monomial initial ideal in the fan
SubspaceArrangement exceptional_arrangement(const Configuration& a, const GroebnerFan& fan);

}  // namespace hypex
