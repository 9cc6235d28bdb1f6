#pragma once

#include "polyhodge/analytic/complex.hpp"
#include "polyhodge/analytic/period_matrix.hpp"

namespace polyhodge::analytic {

inline constexpr double kSeriesRadius = 0.75;

// Li_n(z) = sum_{k>=1} z^k / k^n, truncated once the geometric tail bound
// |z|^{K+1} / ((K+1)^n (1-|z|)) drops below `tol`. Requires |z| <= 0.75.
Complex li_series(int n, const Complex& z, double tol);

// Lambda_n(z) for real 0 < z < 1 on the principal branch: row 0 holds
// (1, Li_1(z), ..., Li_n(z)), row i >= 1 holds (2 pi i)^i log^{j-i}(z)/(j-i)!.
// Points with z > 0.75 obtain their Li values by transport along [1/2, z].
PeriodMatrix principal_lambda(int n, const Real& z, double tol);

}  // namespace polyhodge::analytic
