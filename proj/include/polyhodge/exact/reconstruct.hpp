#pragma once

#include "polyhodge/exact/rational.hpp"
#include "polyhodge/real.hpp"

#include <optional>

namespace polyhodge::exact {

// Walks the continued-fraction convergents of x with denominator at most
// `max_denominator` and returns the first one within `tolerance` of x.
std::optional<Rational> rational_reconstruct(const Real& x, const BigInt& max_denominator,
                                             const Real& tolerance);

}  // namespace polyhodge::exact
