#pragma once

#include "polyhodge/analytic/path.hpp"
#include "polyhodge/analytic/period_matrix.hpp"
#include "polyhodge/exact/matrix.hpp"

#include <optional>

namespace polyhodge::analytic {

// Lambda_n at the base point of `path`: principal_lambda when the base lies in
// (0, 1), otherwise transported from z = 1/2 along a straight segment.
PeriodMatrix lambda_at_base(int n, const PathSpec& path, double tol);

struct MonodromyOptions {
    double tol = 1e-12;
    // Defaults to n! when unset.
    std::optional<exact::BigInt> max_denominator;
    // Defaults to 100 * tol when unset.
    std::optional<double> reconstruction_tolerance;
};

// Numerical monodromy M = transport(Lambda) * Lambda^{-1} along a closed loop.
ComplexMatrix numeric_monodromy(int n, const PathSpec& loop, double tol);

// Entrywise rational reconstruction of the numerical monodromy. Throws
// ReconstructionError naming the first entry that does not reconstruct.
exact::RationalMatrix monodromy(int n, const PathSpec& loop, const MonodromyOptions& options = {});
exact::RationalMatrix monodromy(int n, const PathSpec& loop, double tol);

}  // namespace polyhodge::analytic
