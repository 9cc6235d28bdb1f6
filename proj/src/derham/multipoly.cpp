#include "polyhodge/derham/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace polyhodge::derham {

MultiPolynomial MultiPolynomial::constant(int variables, const Rational& c) {
    MultiPolynomial p(variables);
    p.add_term(Exponent(variables, 0), c);
    return p;
}

MultiPolynomial MultiPolynomial::variable(int variables, int index) {
    Exponent e(variables, 0);
    e.at(index) = 1;
    return monomial(variables, 1, std::move(e));
}

MultiPolynomial MultiPolynomial::monomial(int variables, const Rational& c, Exponent exponent) {
    if (static_cast<int>(exponent.size()) != variables) throw std::invalid_argument("monomial: exponent size");
    MultiPolynomial p(variables);
    p.add_term(exponent, c);
    return p;
}

MultiPolynomial MultiPolynomial::compose(const exact::RationalPolynomial& p, const MultiPolynomial& x) {
    MultiPolynomial acc(x.variables());
    const auto& coeffs = p.coefficients();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + constant(x.variables(), *it);
    return acc;
}

void MultiPolynomial::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool MultiPolynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (unsigned d : terms_.begin()->first)
        if (d != 0) return false;
    return true;
}

Rational MultiPolynomial::constant_term() const {
    const auto it = terms_.find(Exponent(vars_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPolynomial::degree_in(int var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

unsigned MultiPolynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned sum = 0;
        for (unsigned x : e) sum += x;
        d = std::max(d, sum);
    }
    return d;
}

MultiPolynomial MultiPolynomial::partial(int var) const {
    MultiPolynomial out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent d = e;
        --d[var];
        out.add_term(d, c * static_cast<long>(e[var]));
    }
    return out;
}

MultiPolynomial MultiPolynomial::substitute(int var, const Rational& value) const {
    MultiPolynomial out(vars_);
    for (const auto& [e, c] : terms_) {
        Exponent d = e;
        d[var] = 0;
        Rational scaled = c;
        for (unsigned i = 0; i < e[var]; ++i) scaled *= value;
        out.add_term(d, scaled);
    }
    return out;
}

MultiPolynomial MultiPolynomial::pow(unsigned e) const {
    MultiPolynomial out = constant(vars_, 1);
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
}

std::complex<double> MultiPolynomial::evaluate(std::span<const std::complex<double>> point) const {
    if (static_cast<int>(point.size()) != vars_) throw std::invalid_argument("evaluate: wrong number of variables");
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> term = c.convert_to<double>();
        for (int v = 0; v < vars_; ++v)
            for (unsigned i = 0; i < e[v]; ++i) term *= point[v];
        acc += term;
    }
    return acc;
}

MultiPolynomial& MultiPolynomial::operator+=(const MultiPolynomial& other) {
    if (other.vars_ != vars_) throw std::invalid_argument("MultiPolynomial: variable count mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

MultiPolynomial& MultiPolynomial::operator-=(const MultiPolynomial& other) {
    if (other.vars_ != vars_) throw std::invalid_argument("MultiPolynomial: variable count mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

MultiPolynomial& MultiPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, value] : terms_) value *= c;
    return *this;
}

MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
    if (a.vars_ != b.vars_) throw std::invalid_argument("MultiPolynomial: variable count mismatch");
    MultiPolynomial out(a.vars_);
    Exponent e(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int v = 0; v < a.vars_; ++v) e[v] = ea[v] + eb[v];
            out.add_term(e, ca * cb);
        }
    return out;
}

std::string MultiPolynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Highest terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (magnitude != 1) {
            out << exact::to_string(magnitude);
            wrote = true;
        }
        for (int v = 0; v < vars_; ++v) {
            if (e[v] == 0) continue;
            out << (wrote ? "*" : "") << names.at(v);
            if (e[v] > 1) out << "^" << e[v];
            wrote = true;
        }
        if (!wrote) out << "1";
    }
    return out.str();
}

std::optional<MultiPolynomial> divide_exact(const MultiPolynomial& dividend, const MultiPolynomial& divisor) {
    if (divisor.is_zero()) throw std::invalid_argument("divide_exact: division by zero polynomial");
    const int vars = dividend.variables();
    const auto& [lead_exp, lead_coef] = *divisor.terms().rbegin();
    MultiPolynomial remainder = dividend;
    MultiPolynomial quotient(vars);
    while (!remainder.is_zero()) {
        const auto& [exp, coef] = *remainder.terms().rbegin();
        Exponent shift(vars);
        for (int v = 0; v < vars; ++v) {
            if (exp[v] < lead_exp[v]) return std::nullopt;
            shift[v] = exp[v] - lead_exp[v];
        }
        const MultiPolynomial step = MultiPolynomial::monomial(vars, coef / lead_coef, std::move(shift));
        quotient += step;
        remainder -= step * divisor;
    }
    return quotient;
}

}  // namespace polyhodge::derham
