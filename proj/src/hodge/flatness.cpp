#include "polyhodge/hodge/flatness.hpp"

#include "polyhodge/analytic/polylog.hpp"
#include "polyhodge/errors.hpp"
#include "polyhodge/hodge/connection.hpp"

namespace polyhodge::hodge {

Real flatness_residual(int n, const Real& z, const Real& h, double tol) {
    if (!(h > 0)) throw DomainError("flatness_residual: need h > 0");
    if (!(z - h > 0 && z + h < 1)) throw DomainError("flatness_residual: need 0 < z-h < z+h < 1");
    using analytic::Complex;
    const auto plus = analytic::principal_lambda(n, Real(z + h), tol);
    const auto minus = analytic::principal_lambda(n, Real(z - h), tol);
    const auto centre = analytic::principal_lambda(n, z, tol);
    const auto rhs = centre.entries * evaluate_connection(connection(n), Complex(z, Real(0)));
    Real worst = 0;
    for (int r = 0; r <= n; ++r)
        for (int c = 0; c <= n; ++c) {
            const Complex fd = (plus(r, c) - minus(r, c)) / Real(2 * h);
            const Real dev = (fd - rhs(r, c)).abs();
            if (dev > worst) worst = dev;
        }
    return worst;
}

}  // namespace polyhodge::hodge
