#include <doctest.h>

#include "polyhodge/analytic/polylog.hpp"
#include "polyhodge/derham/forms.hpp"
#include "polyhodge/derham/quadrature.hpp"
#include "polyhodge/errors.hpp"
#include "polyhodge/exact/polynomial.hpp"

#include <cmath>
#include <complex>
#include <numbers>

using namespace polyhodge;
using namespace polyhodge::derham;
using analytic::Complex;
using exact::Rational;

namespace {

MultiPolynomial var(int vars, int i) { return MultiPolynomial::variable(vars, i); }
MultiPolynomial one(int vars) { return MultiPolynomial::constant(vars, 1); }

RationalFunction expected_form(int n, const exact::RationalPolynomial& numerator_in_x, unsigned exponent) {
    MultiPolynomial x = var(n + 1, 0);
    for (int i = 1; i <= n; ++i) x = x * var(n + 1, i);
    return RationalFunction(var(n + 1, 0) * MultiPolynomial::compose(numerator_in_x, x), {{one(n + 1) - x, exponent}});
}

}  // namespace

TEST_CASE("omega: examples") {
    const auto w20 = omega(2, 0);
    CHECK(w20.degree == 2);
    CHECK(identical(w20.coefficient, RationalFunction(one(3))));

    // k = n: z / (1 - z t_1 ... t_n).
    for (int n = 1; n <= 4; ++n) CHECK(identical(omega(n, n).coefficient, expected_form(n, exact::RationalPolynomial{1}, 1)));
    // (2, 1): E_1 = 1, so z / (1 - z t1 t2)^2.
    CHECK(identical(omega(2, 1).coefficient, expected_form(2, exact::RationalPolynomial{1}, 2)));
    CHECK_FALSE(identical(omega(2, 1).coefficient, expected_form(2, exact::RationalPolynomial{1, 1}, 3)));
    // (3, 1): E_2 = 1 + x, so z (1 + z t1 t2 t3) / (1 - z t1 t2 t3)^3.
    CHECK(identical(omega(3, 1).coefficient, expected_form(3, exact::RationalPolynomial{1, 1}, 3)));
    CHECK_THROWS_AS(omega(2, 3), DomainError);
    CHECK_THROWS_AS(omega(2, -1), DomainError);
}

TEST_CASE("omega: numerator degree follows the Eulerian polynomial") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto num = omega_numerator_in_x(n, k);
            CHECK(num.degree() == std::max(n - k - 1, 0));
            CHECK(num == exact::eulerian(n - k));
        }
}

TEST_CASE("form recurrence: exact identities") {
    CHECK(form_recurrence_check(2, 2));
    CHECK(form_recurrence_check(3, 2));
    for (int n = 2; n <= 6; ++n)
        for (int k = 2; k <= n; ++k) CHECK(form_recurrence_check(n, k));
    for (int n = 0; n <= 4; ++n) CHECK(partial_z(omega(n, 0)).coefficient.is_zero());
    CHECK_THROWS_AS(form_recurrence_check(3, 1), DomainError);
    CHECK_THROWS_AS(form_recurrence_check(3, 4), DomainError);
}

TEST_CASE("form recurrence: a wrong exponent breaks it") {
    for (int n = 2; n <= 4; ++n)
        for (int k = 2; k <= n; ++k) {
            const auto upper = omega_with_exponent(n, k, static_cast<unsigned>(n - k + 2));
            CHECK_FALSE(recurrence_holds(upper, omega(n, k - 1)));
            CHECK(recurrence_holds(omega_with_exponent(n, k, static_cast<unsigned>(n - k + 1)), omega(n, k - 1)));
        }
}

TEST_CASE("gauge: exact in cohomology, not at form level") {
    const auto report = gauge_exactness_check();
    CHECK(report.exact);
    CHECK(report.boundary);
    CHECK(report.ok());

    const MultiPolynomial z = var(2, 0), t = var(2, 1), u = one(2);
    // t(1-t) replaced by t: boundary term at t = 1 survives.
    const RationalFunction linear(-(z * t), {{u - z, 1}, {u - z * t, 1}});
    CHECK_FALSE(gauge_exactness_check(linear).boundary);
    CHECK_FALSE(gauge_exactness_check(linear).ok());
    // nu scaled by 2: d nu no longer matches.
    const auto doubled = gauge_form() * Rational(2);
    CHECK_FALSE(gauge_exactness_check(doubled).exact);
    CHECK(gauge_exactness_check(doubled).boundary);
    // The k = 1 relation fails at the level of forms: d/dz omega_1^(1) is not
    // omega_1^(0)/(1 - z).
    CHECK_FALSE(gauge_exactness_check(RationalFunction(MultiPolynomial(2))).exact);
}

TEST_CASE("multipoly and rational functions: cancellation and division") {
    const MultiPolynomial x = var(2, 0), y = var(2, 1), u = one(2);
    const auto q = divide_exact((x - y) * (x + y), x - y);
    REQUIRE(q.has_value());
    CHECK(*q == x + y);
    CHECK_FALSE(divide_exact(x * x + u, x).has_value());
    const RationalFunction f(x * x - y * y, {{x - y, 1}});
    CHECK(f.denominator_factors().empty());
    CHECK(f.numerator() == x + y);
    CHECK(identical(f.partial(0), RationalFunction(u)));
    CHECK_THROWS_AS(RationalFunction(u, {{u - x, 1}}).substitute(0, 1), DomainError);
}

TEST_CASE("gauss-legendre: exact for low-degree polynomials") {
    for (int order : {1, 2, 4, 8, 16}) {
        const auto& rule = gauss_legendre(order);
        double sum = 0;
        for (double w : rule.weights) sum += w;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));
        for (int degree = 0; degree < 2 * order; ++degree) {
            double integral = 0;
            for (int i = 0; i < order; ++i) integral += rule.weights[i] * std::pow(rule.nodes[i], degree);
            CHECK(integral == doctest::Approx(1.0 / (degree + 1)).epsilon(1e-13));
        }
    }
}

TEST_CASE("integrate_cube: examples") {
    CHECK(std::abs(integrate_cube(2, 0, Complex(Real("0.5")), 1e-12).to_std() - 1.0) < 1e-10);
    const auto li2 = analytic::li_series(2, Complex(Real("0.5")), 1e-15);
    CHECK((integrate_cube(2, 2, Complex(Real("0.5")), 1e-10) - li2).abs() < Real("1e-8"));
    const auto minus_log2 = integrate_cube(3, 1, Complex(-1), 1e-10);
    CHECK(std::abs(minus_log2.to_std() + std::log(2.0)) < 1e-8);
    // Li_2(-1) = -pi^2/12.
    const auto li2_minus_one = integrate_cube(2, 2, Complex(-1), 1e-10);
    const double pi = std::numbers::pi;
    CHECK(std::abs(li2_minus_one.to_std() + pi * pi / 12) < 1e-8);
}

TEST_CASE("integrate_cube: identity against the series") {
    const Complex points[] = {Complex(Real("0.3")), Complex(Real("-0.5")), Complex(Real("0.25"), Real("0.25"))};
    for (const auto& z : points)
        for (int n = 1; n <= 3; ++n)
            for (int k = 0; k <= n; ++k) {
                const Complex value = integrate_cube(n, k, z, 1e-8);
                const Complex reference = k == 0 ? Complex(1) : analytic::li_series(k, z, 1e-20);
                CHECK((value - reference).abs() <= Real(k == 0 ? "1e-10" : "1e-6"));
            }
}

TEST_CASE("integrate_cube: domain guards") {
    CHECK_THROWS_AS(integrate_cube(5, 1, Complex(Real("0.5")), 1e-8), DomainError);
    CHECK_THROWS_AS(integrate_cube(2, 3, Complex(Real("0.5")), 1e-8), DomainError);
    CHECK_THROWS_AS(integrate_cube(2, 1, Complex(Real("1.02")), 1e-8), DomainError);
    CHECK_THROWS_AS(integrate_cube(2, 1, Complex(Real("2"), Real("0.01")), 1e-8), DomainError);
}
