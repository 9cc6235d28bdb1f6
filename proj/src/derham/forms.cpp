#include "polyhodge/derham/forms.hpp"

#include "polyhodge/errors.hpp"

namespace polyhodge::derham {

MultiPolynomial product_variable(int n) {
    return MultiPolynomial::monomial(n + 1, 1, Exponent(n + 1, 1));
}

exact::RationalPolynomial omega_numerator_in_x(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw DomainError("omega: need 0 <= k <= n");
    if (k == 0) return exact::RationalPolynomial::constant(1);
    return exact::eulerian(static_cast<unsigned>(n - k));
}

RationalForm omega_with_exponent(int n, int k, unsigned exponent) {
    if (n < 0 || k < 1 || k > n) throw DomainError("omega: need 1 <= k <= n");
    const int vars = n + 1;
    const MultiPolynomial x = product_variable(n);
    const MultiPolynomial z = MultiPolynomial::variable(vars, 0);
    MultiPolynomial numerator = z * MultiPolynomial::compose(omega_numerator_in_x(n, k), x);
    const MultiPolynomial one_minus_x = MultiPolynomial::constant(vars, 1) - x;
    return RationalForm{n, n, RationalFunction(std::move(numerator), {{one_minus_x, exponent}})};
}

RationalForm omega(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw DomainError("omega: need 0 <= k <= n");
    if (k == 0) return RationalForm{n, n, RationalFunction(MultiPolynomial::constant(n + 1, 1))};
    return omega_with_exponent(n, k, static_cast<unsigned>(n - k + 1));
}

RationalForm partial_z(const RationalForm& form) {
    return RationalForm{form.n, form.degree, form.coefficient.partial(0)};
}

RationalForm scale(const RationalForm& form, const RationalFunction& factor) {
    return RationalForm{form.n, form.degree, form.coefficient * factor};
}

namespace {

RationalFunction one_over(const MultiPolynomial& p) {
    return RationalFunction(MultiPolynomial::constant(p.variables(), 1), {{p, 1}});
}

}  // namespace

bool recurrence_holds(const RationalForm& upper, const RationalForm& lower) {
    if (upper.n != lower.n || upper.degree != lower.degree) return false;
    const RationalFunction inv_z = one_over(MultiPolynomial::variable(upper.n + 1, 0));
    return identical(partial_z(upper).coefficient, scale(lower, inv_z).coefficient);
}

bool form_recurrence_check(int n, int k) {
    if (k < 2 || k > n) throw DomainError("form_recurrence_check: need 2 <= k <= n");
    if (!partial_z(omega(n, 0)).coefficient.is_zero()) return false;
    return recurrence_holds(omega(n, k), omega(n, k - 1));
}

RationalFunction gauge_form() {
    const MultiPolynomial z = MultiPolynomial::variable(2, 0);
    const MultiPolynomial t = MultiPolynomial::variable(2, 1);
    const MultiPolynomial one = MultiPolynomial::constant(2, 1);
    return RationalFunction(-(z * t * (one - t)), {{one - z, 1}, {one - z * t, 1}});
}

GaugeReport gauge_exactness_check(const RationalFunction& nu) {
    if (nu.variables() != 2) throw DomainError("gauge_exactness_check: nu must be a function of (z, t)");
    const MultiPolynomial one = MultiPolynomial::constant(2, 1);
    const MultiPolynomial z = MultiPolynomial::variable(2, 0);
    const RationalForm lhs_form = partial_z(omega(1, 1));
    const RationalFunction lhs = lhs_form.coefficient - omega(1, 0).coefficient * one_over(one - z);

    GaugeReport report;
    report.exact = identical(lhs, nu.partial(1));
    report.boundary = nu.substitute(1, 0).is_zero() && nu.substitute(1, 1).is_zero();
    return report;
}

GaugeReport gauge_exactness_check() { return gauge_exactness_check(gauge_form()); }

}  // namespace polyhodge::derham
