#pragma once

#include "polyhodge/exact/polynomial.hpp"
#include "polyhodge/exact/rational.hpp"

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polyhodge::derham {

using exact::Rational;

using Exponent = std::vector<unsigned>;

// Sparse polynomial with rational coefficients in a fixed number of
// variables. Terms are keyed by exponent vector in lexicographic order and
// zero coefficients are never stored.
class MultiPolynomial {
public:
    explicit MultiPolynomial(int variables = 0) : vars_(variables) {}

    static MultiPolynomial constant(int variables, const Rational& c);
    static MultiPolynomial variable(int variables, int index);
    static MultiPolynomial monomial(int variables, const Rational& c, Exponent exponent);
    // p(x) with x replaced by the polynomial `x`.
    static MultiPolynomial compose(const exact::RationalPolynomial& p, const MultiPolynomial& x);

    int variables() const { return vars_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    unsigned degree_in(int var) const;
    unsigned total_degree() const;

    MultiPolynomial partial(int var) const;
    MultiPolynomial substitute(int var, const Rational& value) const;
    MultiPolynomial pow(unsigned e) const;

    std::complex<double> evaluate(std::span<const std::complex<double>> point) const;

    MultiPolynomial& operator+=(const MultiPolynomial& other);
    MultiPolynomial& operator-=(const MultiPolynomial& other);
    MultiPolynomial& operator*=(const Rational& c);

    friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
    friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }
    friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b);
    friend MultiPolynomial operator*(MultiPolynomial a, const Rational& c) { return a *= c; }
    friend MultiPolynomial operator-(MultiPolynomial a) { return a *= Rational(-1); }
    friend bool operator==(const MultiPolynomial&, const MultiPolynomial&) = default;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    void add_term(const Exponent& e, const Rational& c);

    int vars_;
    std::map<Exponent, Rational> terms_;
};

// Exact division: the quotient when `divisor` divides `dividend`, nullopt
// otherwise. Uses lexicographic leading terms.
std::optional<MultiPolynomial> divide_exact(const MultiPolynomial& dividend, const MultiPolynomial& divisor);

}  // namespace polyhodge::derham
