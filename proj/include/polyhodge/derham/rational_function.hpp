#pragma once

#include "polyhodge/derham/multipoly.hpp"

#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace polyhodge::derham {

// Numerator over a factored denominator prod f_i^{e_i}. The factors are
// irreducible and pairwise distinct, so cancelling every factor that divides
// the numerator leaves the fraction in lowest terms.
class RationalFunction {
public:
    struct Factor {
        MultiPolynomial base;
        unsigned exponent;
    };

    explicit RationalFunction(MultiPolynomial numerator);
    RationalFunction(MultiPolynomial numerator, std::vector<Factor> denominator);

    int variables() const { return numerator_.variables(); }
    const MultiPolynomial& numerator() const { return numerator_; }
    const std::vector<Factor>& denominator_factors() const { return factors_; }
    MultiPolynomial denominator() const;
    bool is_zero() const { return numerator_.is_zero(); }

    RationalFunction partial(int var) const;
    // Restriction to a hyperplane var = value; throws DomainError when a
    // denominator factor vanishes identically there.
    RationalFunction substitute(int var, const Rational& value) const;

    std::complex<double> evaluate(std::span<const std::complex<double>> point) const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const Rational& c);

    std::string to_string(const std::vector<std::string>& names) const;

private:
    void normalize();

    MultiPolynomial numerator_;
    std::vector<Factor> factors_;
};

// Equality as rational functions, decided by the polynomial identity
// N_a * D_b == N_b * D_a.
bool identical(const RationalFunction& a, const RationalFunction& b);

// coefficient * dt_1 ... dt_n on the coordinates (z, t_1, ..., t_n); variable 0
// is the parameter z. Degree 0 means a function.
struct RationalForm {
    int n = 0;
    int degree = 0;
    RationalFunction coefficient{MultiPolynomial(1)};

    std::vector<std::string> variable_names() const;
    std::string to_string() const;
};

}  // namespace polyhodge::derham
