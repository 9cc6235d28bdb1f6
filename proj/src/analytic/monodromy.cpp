#include "polyhodge/analytic/monodromy.hpp"

#include "polyhodge/analytic/polylog.hpp"
#include "polyhodge/analytic/transport.hpp"
#include "polyhodge/errors.hpp"
#include "polyhodge/exact/reconstruct.hpp"

#include <string>

namespace polyhodge::analytic {

PeriodMatrix lambda_at_base(int n, const PathSpec& path, double tol) {
    const Complex& base = path.base;
    if (base.imag() == 0 && base.real() > 0 && base.real() < 1) return principal_lambda(n, base.real(), tol);
    PathSpec approach{Complex(0.5), {LineSegment{base}}, false};
    return transport(n, approach, principal_lambda(n, Real(0.5), tol), tol);
}

ComplexMatrix numeric_monodromy(int n, const PathSpec& loop, double tol) {
    if (!loop.closed) throw DomainError("monodromy: path is not closed");
    const PeriodMatrix start = lambda_at_base(n, loop, tol);
    const PeriodMatrix end = transport(n, loop, start, tol);
    return end.entries * upper_triangular_inverse(start.entries);
}

exact::RationalMatrix monodromy(int n, const PathSpec& loop, const MonodromyOptions& options) {
    if (n < 1) throw DomainError("monodromy: n must be positive");
    const ComplexMatrix m = numeric_monodromy(n, loop, options.tol);
    const exact::BigInt max_den = options.max_denominator.value_or(exact::factorial(static_cast<unsigned>(n)));
    const Real tolerance(options.reconstruction_tolerance.value_or(100 * options.tol));

    exact::RationalMatrix out(n + 1, n + 1);
    for (int r = 0; r <= n; ++r)
        for (int c = 0; c <= n; ++c) {
            const Complex& x = m(r, c);
            const auto q = exact::rational_reconstruct(x.real(), max_den, tolerance);
            if (!q || abs(x.imag()) > tolerance)
                throw ReconstructionError("monodromy: entry (" + std::to_string(r) + "," + std::to_string(c) +
                                              ") = " + to_decimal(x.real()) + " + " + to_decimal(x.imag()) +
                                              "i is not a bounded rational",
                                          r, c);
            out(r, c) = *q;
        }
    return out;
}

exact::RationalMatrix monodromy(int n, const PathSpec& loop, double tol) {
    MonodromyOptions options;
    options.tol = tol;
    return monodromy(n, loop, options);
}

}  // namespace polyhodge::analytic
