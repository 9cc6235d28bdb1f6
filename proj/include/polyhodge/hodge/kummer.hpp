#pragma once

#include "polyhodge/analytic/complex.hpp"

namespace polyhodge::hodge {

// Kummer period matrix [[1, log z], [0, 2 pi i]] on the principal branch.
analytic::ComplexMatrix kummer_matrix(const Real& z);

// m-th symmetric power in the monomial basis x^{m-a} y^a; column b holds the
// image of x^{m-b} y^b under the substitution (x, y) -> (x, y) K.
// Multiplicative: Sym(AB) = Sym(A) Sym(B).
analytic::ComplexMatrix symmetric_power(const analytic::ComplexMatrix& k, int m);

// 2 pi i * D Sym^{n-1}(K) D^{-1} with D = diag(0!, 1!, ..., (n-1)!).
analytic::ComplexMatrix twisted_kummer_block(int n, const Real& z);

struct BlockCheckReport {
    bool ok = true;
    int row = -1;  // offending entry of the lower-right block, 0-based
    int col = -1;
    Real max_deviation = 0;
};

// Compares the lower-right n x n block of Lambda_n(z) to the twisted
// divided-power symmetric power of the Kummer matrix. Requires 0 < z < 1.
BlockCheckReport kummer_block_check(int n, const Real& z, double tol);

}  // namespace polyhodge::hodge
