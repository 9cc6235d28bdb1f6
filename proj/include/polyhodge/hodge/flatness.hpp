#pragma once

#include "polyhodge/real.hpp"

namespace polyhodge::hodge {

// max over entries of |(L(z+h) - L(z-h))/2h - L(z) Omega(z)| for the
// principal branch L of weight n; needs 0 < z-h < z+h < 1.
Real flatness_residual(int n, const Real& z, const Real& h, double tol);

}  // namespace polyhodge::hodge
