#pragma once

#include "polyhodge/analytic/path.hpp"
#include "polyhodge/analytic/period_matrix.hpp"

namespace polyhodge::analytic {

struct TransportOptions {
    double tol = 1e-12;
    double path_margin = kDefaultPathMargin;
    // Steps shorter than this (in arclength) count as underflow.
    double min_step = 1e-14;
};

// Analytic continuation of `start` along `path` by integrating
// dL/ds = L Omega_n(z(s)) z'(s) with an embedded Dormand-Prince 5(4) pair.
// Local error is held below tol per unit arclength and each step is capped
// at a quarter of the distance to the nearest puncture.
PeriodMatrix transport(int n, const PathSpec& path, const PeriodMatrix& start,
                       const TransportOptions& options = {});

PeriodMatrix transport(int n, const PathSpec& path, const PeriodMatrix& start, double tol);

}  // namespace polyhodge::analytic
