#pragma once

#include "polyhodge/exact/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace polyhodge::exact {

// Dense univariate polynomial with rational coefficients; coefficient i
// multiplies x^i. Trailing zeros are trimmed so the zero polynomial has no
// coefficients at all.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coefficients);
    RationalPolynomial(std::initializer_list<Rational> coefficients);

    static RationalPolynomial constant(const Rational& c);
    static RationalPolynomial monomial(const Rational& c, unsigned degree);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coefficient(unsigned i) const;

    Rational operator()(const Rational& x) const;

    RationalPolynomial derivative() const;
    // Antiderivative vanishing at 0.
    RationalPolynomial antiderivative() const;

    RationalPolynomial& operator+=(const RationalPolynomial& other);
    RationalPolynomial& operator-=(const RationalPolynomial& other);
    RationalPolynomial& operator*=(const RationalPolynomial& other);
    RationalPolynomial& operator*=(const Rational& c);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) { return a *= c; }
    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

// E_r(x), generated from E_0 = 1 by E_{r+1} = x(1-x)E_r' + (1+rx)E_r.
RationalPolynomial eulerian(unsigned r);

}  // namespace polyhodge::exact
