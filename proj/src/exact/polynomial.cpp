#include "polyhodge/exact/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace polyhodge::exact {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
    trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<Rational> coefficients)
    : coeffs_(coefficients) {
    trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(const Rational& c, unsigned degree) {
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = c;
    return RationalPolynomial(std::move(coeffs));
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(unsigned i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::antiderivative() const {
    if (coeffs_.empty()) return {};
    std::vector<Rational> a(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) a[i + 1] = coeffs_[i] / static_cast<long>(i + 1);
    return RationalPolynomial(std::move(a));
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> product(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) product[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    coeffs_ = std::move(product);
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
}

std::string RationalPolynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational magnitude = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || magnitude != 1) out << exact::to_string(magnitude);
        if (i > 0) {
            if (magnitude != 1) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

RationalPolynomial eulerian(unsigned r) {
    RationalPolynomial e = RationalPolynomial::constant(1);
    const RationalPolynomial x_one_minus_x({0, 1, -1});
    for (unsigned s = 0; s < r; ++s) {
        const RationalPolynomial one_plus_sx({1, static_cast<long>(s)});
        e = x_one_minus_x * e.derivative() + one_plus_sx * e;
    }
    return e;
}

}  // namespace polyhodge::exact
