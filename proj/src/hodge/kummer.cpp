#include "polyhodge/hodge/kummer.hpp"

#include "polyhodge/analytic/polylog.hpp"
#include "polyhodge/errors.hpp"

#include <vector>

namespace polyhodge::hodge {

using analytic::Complex;
using analytic::ComplexMatrix;

namespace {

Real binomial(int n, int k) {
    Real b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

Complex power(const Complex& z, int e) {
    Complex out(1);
    for (int i = 0; i < e; ++i) out *= z;
    return out;
}

// Coefficients in y of (p x + q y)^e, index = degree in y.
std::vector<Complex> binomial_expansion(const Complex& p, const Complex& q, int e) {
    std::vector<Complex> out(e + 1);
    for (int i = 0; i <= e; ++i) out[i] = binomial(e, i) * power(q, i) * power(p, e - i);
    return out;
}

}  // namespace

ComplexMatrix kummer_matrix(const Real& z) {
    if (!(z > 0 && z < 1)) throw DomainError("kummer_matrix: z must lie in (0, 1)");
    ComplexMatrix k(2);
    k(0, 0) = Complex(1);
    k(0, 1) = Complex(Real(log(z)));
    k(1, 1) = analytic::two_pi_i();
    return k;
}

ComplexMatrix symmetric_power(const ComplexMatrix& k, int m) {
    if (k.size() != 2 || m < 0) throw DomainError("symmetric_power: needs a 2x2 matrix and m >= 0");
    ComplexMatrix s(m + 1);
    for (int b = 0; b <= m; ++b) {
        // Image of x^{m-b} y^b: (k00 x + k10 y)^{m-b} (k01 x + k11 y)^b.
        const auto first = binomial_expansion(k(0, 0), k(1, 0), m - b);
        const auto second = binomial_expansion(k(0, 1), k(1, 1), b);
        for (std::size_t i = 0; i < first.size(); ++i)
            for (std::size_t j = 0; j < second.size(); ++j) s(static_cast<int>(i + j), b) += first[i] * second[j];
    }
    return s;
}

ComplexMatrix twisted_kummer_block(int n, const Real& z) {
    if (n < 1) throw DomainError("twisted_kummer_block: n must be positive");
    const int m = n - 1;
    const ComplexMatrix sym = symmetric_power(kummer_matrix(z), m);
    std::vector<Real> factorial(m + 1, Real(1));
    for (int a = 1; a <= m; ++a) factorial[a] = factorial[a - 1] * a;
    const Complex tpi = analytic::two_pi_i();
    ComplexMatrix out(n);
    for (int a = 0; a <= m; ++a)
        for (int b = 0; b <= m; ++b) out(a, b) = tpi * (sym(a, b) * (factorial[a] / factorial[b]));
    return out;
}

BlockCheckReport kummer_block_check(int n, const Real& z, double tol) {
    if (n < 1) throw DomainError("kummer_block_check: n must be positive");
    if (!(z > 0 && z < 1)) throw DomainError("kummer_block_check: z must lie in (0, 1)");
    const analytic::PeriodMatrix lambda = analytic::principal_lambda(n, z, tol);
    const ComplexMatrix expected = twisted_kummer_block(n, z);

    BlockCheckReport report;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Real dev = (lambda(a + 1, b + 1) - expected(a, b)).abs();
            if (dev > report.max_deviation) report.max_deviation = dev;
            if (dev > Real(tol) && report.ok) {
                report.ok = false;
                report.row = a;
                report.col = b;
            }
        }
    return report;
}

}  // namespace polyhodge::hodge
