#include "polyhodge/analytic/polylog.hpp"

#include "polyhodge/analytic/transport.hpp"
#include "polyhodge/errors.hpp"

#include <string>

namespace polyhodge::analytic {

Complex li_series(int n, const Complex& z, double tol) {
    if (n < 1) throw DomainError("li_series: n must be positive");
    if (!(tol > 0)) throw DomainError("li_series: tol must be positive");
    const Real radius = z.abs();
    if (radius > Real(kSeriesRadius)) throw DomainError("li_series: |z| > 0.75, use transport instead");
    if (radius == 0) return Complex(0);

    const Real tail_scale = 1 / (1 - radius);
    Complex sum(0);
    Complex power = z;
    Real radius_power = radius;
    for (long k = 1;; ++k) {
        Real k_pow = pow(Real(k), n);
        sum += power / k_pow;
        // Remaining terms are bounded by |z|^{k+1} / ((k+1)^n (1-|z|)).
        radius_power *= radius;
        const Real tail = radius_power * tail_scale / pow(Real(k + 1), n);
        if (tail <= tol) break;
        power *= z;
    }
    return sum;
}

PeriodMatrix principal_lambda(int n, const Real& z, double tol) {
    if (n < 0) throw DomainError("principal_lambda: negative weight");
    if (!(z > 0 && z < 1)) throw DomainError("principal_lambda: z must lie in (0, 1)");

    PeriodMatrix lambda{n, ComplexMatrix(n + 1), "principal"};
    lambda.entries(0, 0) = Complex(1);

    const Complex tpi = two_pi_i();
    const Real log_z = log(z);
    // Rows i >= 1: (2 pi i)^i log^{j-i}(z) / (j-i)!.
    Complex twist(1);
    for (int i = 1; i <= n; ++i) {
        twist *= tpi;
        Real term = 1;
        for (int j = i; j <= n; ++j) {
            if (j > i) term = term * log_z / (j - i);
            lambda.entries(i, j) = twist * term;
        }
    }
    if (n == 0) return lambda;

    if (z <= Real(kSeriesRadius)) {
        for (int k = 1; k <= n; ++k) lambda.entries(0, k) = li_series(k, Complex(z), tol);
        return lambda;
    }

    // Real segment [1/2, z] stays on the principal branch.
    PathSpec segment{Complex(0.5), {LineSegment{Complex(z)}}, false};
    const PeriodMatrix moved = transport(n, segment, principal_lambda(n, Real(0.5), tol), tol);
    for (int k = 1; k <= n; ++k) lambda.entries(0, k) = moved.entries(0, k);
    return lambda;
}

}  // namespace polyhodge::analytic
