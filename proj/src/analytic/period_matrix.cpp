#include "polyhodge/analytic/period_matrix.hpp"

#include "polyhodge/errors.hpp"

namespace polyhodge::analytic {

ComplexMatrix upper_triangular_inverse(const ComplexMatrix& m) {
    const int n = m.size();
    ComplexMatrix inv(n);
    // Column c of the inverse solves m x = e_c, bottom row first.
    for (int c = 0; c < n; ++c) {
        for (int r = c; r >= 0; --r) {
            Complex acc = (r == c) ? Complex(1) : Complex(0);
            for (int k = r + 1; k <= c; ++k) acc -= m(r, k) * inv(k, c);
            if (m(r, r).norm() == 0) throw DomainError("upper_triangular_inverse: singular diagonal");
            inv(r, c) = acc / m(r, r);
        }
    }
    return inv;
}

}  // namespace polyhodge::analytic
