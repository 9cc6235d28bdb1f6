#include "polyhodge/derham/rational_function.hpp"

#include "polyhodge/errors.hpp"

#include <algorithm>
#include <sstream>

namespace polyhodge::derham {

RationalFunction::RationalFunction(MultiPolynomial numerator) : numerator_(std::move(numerator)) {}

RationalFunction::RationalFunction(MultiPolynomial numerator, std::vector<Factor> denominator)
    : numerator_(std::move(numerator)), factors_(std::move(denominator)) {
    for (const auto& f : factors_) {
        if (f.base.variables() != numerator_.variables())
            throw std::invalid_argument("RationalFunction: factor variable count mismatch");
        if (f.base.is_zero()) throw DomainError("RationalFunction: zero denominator factor");
    }
    normalize();
}

void RationalFunction::normalize() {
    std::vector<Factor> merged;
    for (auto& f : factors_) {
        if (f.exponent == 0) continue;
        if (f.base.is_constant()) {
            Rational c = f.base.constant_term();
            for (unsigned i = 0; i < f.exponent; ++i) numerator_ *= 1 / c;
            continue;
        }
        // Monic in the lexicographically leading term.
        const Rational lead = f.base.terms().rbegin()->second;
        if (lead != 1) {
            f.base *= 1 / lead;
            for (unsigned i = 0; i < f.exponent; ++i) numerator_ *= 1 / lead;
        }
        auto same = std::find_if(merged.begin(), merged.end(), [&](const Factor& g) { return g.base == f.base; });
        if (same != merged.end()) {
            same->exponent += f.exponent;
        } else {
            merged.push_back(std::move(f));
        }
    }
    if (numerator_.is_zero()) merged.clear();
    for (auto& f : merged) {
        while (f.exponent > 0) {
            auto q = divide_exact(numerator_, f.base);
            if (!q) break;
            numerator_ = std::move(*q);
            --f.exponent;
        }
    }
    std::erase_if(merged, [](const Factor& f) { return f.exponent == 0; });
    std::sort(merged.begin(), merged.end(),
              [](const Factor& a, const Factor& b) { return a.base.terms() < b.base.terms(); });
    factors_ = std::move(merged);
}

MultiPolynomial RationalFunction::denominator() const {
    MultiPolynomial d = MultiPolynomial::constant(variables(), 1);
    for (const auto& f : factors_) d = d * f.base.pow(f.exponent);
    return d;
}

RationalFunction RationalFunction::partial(int var) const {
    // (N / prod f_i^e_i)' = (N' prod f_i - N sum e_i f_i' prod_{j != i} f_j) / prod f_i^{e_i+1}
    MultiPolynomial all = MultiPolynomial::constant(variables(), 1);
    for (const auto& f : factors_) all = all * f.base;
    MultiPolynomial num = numerator_.partial(var) * all;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        MultiPolynomial others = MultiPolynomial::constant(variables(), 1);
        for (std::size_t j = 0; j < factors_.size(); ++j)
            if (j != i) others = others * factors_[j].base;
        num -= numerator_ * factors_[i].base.partial(var) * others * Rational(static_cast<long>(factors_[i].exponent));
    }
    std::vector<Factor> den = factors_;
    for (auto& f : den) ++f.exponent;
    return RationalFunction(std::move(num), std::move(den));
}

RationalFunction RationalFunction::substitute(int var, const Rational& value) const {
    std::vector<Factor> den;
    for (const auto& f : factors_) {
        MultiPolynomial base = f.base.substitute(var, value);
        if (base.is_zero()) throw DomainError("RationalFunction: restriction hits a pole");
        den.push_back({std::move(base), f.exponent});
    }
    return RationalFunction(numerator_.substitute(var, value), std::move(den));
}

std::complex<double> RationalFunction::evaluate(std::span<const std::complex<double>> point) const {
    std::complex<double> value = numerator_.evaluate(point);
    for (const auto& f : factors_) {
        const std::complex<double> base = f.base.evaluate(point);
        for (unsigned i = 0; i < f.exponent; ++i) value /= base;
    }
    return value;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    std::vector<RationalFunction::Factor> den = a.factors_;
    den.insert(den.end(), b.factors_.begin(), b.factors_.end());
    return RationalFunction(a.numerator_ * b.numerator_, std::move(den));
}

RationalFunction operator*(const RationalFunction& a, const Rational& c) {
    return RationalFunction(a.numerator_ * c, a.factors_);
}

namespace {

// Common denominator of a and b, and the cofactor exponents for each side.
struct CommonDenominator {
    std::vector<RationalFunction::Factor> factors;
    MultiPolynomial a_cofactor;
    MultiPolynomial b_cofactor;
};

CommonDenominator common_denominator(const RationalFunction& a, const RationalFunction& b) {
    const int vars = a.variables();
    CommonDenominator out{{}, MultiPolynomial::constant(vars, 1), MultiPolynomial::constant(vars, 1)};
    auto exponent_in = [](const std::vector<RationalFunction::Factor>& list, const MultiPolynomial& base) -> unsigned {
        for (const auto& f : list)
            if (f.base == base) return f.exponent;
        return 0;
    };
    std::vector<MultiPolynomial> bases;
    for (const auto& f : a.denominator_factors()) bases.push_back(f.base);
    for (const auto& f : b.denominator_factors())
        if (std::find(bases.begin(), bases.end(), f.base) == bases.end()) bases.push_back(f.base);
    for (const auto& base : bases) {
        const unsigned ea = exponent_in(a.denominator_factors(), base);
        const unsigned eb = exponent_in(b.denominator_factors(), base);
        const unsigned e = std::max(ea, eb);
        out.factors.push_back({base, e});
        out.a_cofactor = out.a_cofactor * base.pow(e - ea);
        out.b_cofactor = out.b_cofactor * base.pow(e - eb);
    }
    return out;
}

}  // namespace

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    auto common = common_denominator(a, b);
    return RationalFunction(a.numerator_ * common.a_cofactor + b.numerator_ * common.b_cofactor,
                            std::move(common.factors));
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    auto common = common_denominator(a, b);
    return RationalFunction(a.numerator_ * common.a_cofactor - b.numerator_ * common.b_cofactor,
                            std::move(common.factors));
}

std::string RationalFunction::to_string(const std::vector<std::string>& names) const {
    std::ostringstream out;
    out << "(" << numerator_.to_string(names) << ")";
    if (factors_.empty()) return out.str();
    out << " / (";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out << " * ";
        out << "(" << factors_[i].base.to_string(names) << ")";
        if (factors_[i].exponent > 1) out << "^" << factors_[i].exponent;
    }
    out << ")";
    return out.str();
}

bool identical(const RationalFunction& a, const RationalFunction& b) {
    if (a.variables() != b.variables()) return false;
    return (a.numerator() * b.denominator() - b.numerator() * a.denominator()).is_zero();
}

std::vector<std::string> RationalForm::variable_names() const {
    std::vector<std::string> names{"z"};
    for (int i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
    return names;
}

std::string RationalForm::to_string() const {
    std::string out = coefficient.to_string(variable_names());
    if (degree == 0) return out;
    out += " *";
    for (int i = 1; i <= n; ++i) out += " dt" + std::to_string(i);
    return out;
}

}  // namespace polyhodge::derham
