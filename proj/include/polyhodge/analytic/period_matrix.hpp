#pragma once

#include "polyhodge/analytic/complex.hpp"

#include <string>

namespace polyhodge::analytic {

// Fundamental solution matrix of dL = L Omega_n on a chosen branch. Rows
// are the solutions; `branch` records how the branch was reached from the
// principal one at a point of (0, 1).
struct PeriodMatrix {
    int n = 0;
    ComplexMatrix entries;
    std::string branch;

    int dimension() const { return n + 1; }
    const Complex& operator()(int r, int c) const { return entries(r, c); }
};

// Inverse of an upper-triangular matrix by back substitution.
ComplexMatrix upper_triangular_inverse(const ComplexMatrix& m);

}  // namespace polyhodge::analytic
