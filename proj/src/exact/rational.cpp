#include "polyhodge/exact/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace polyhodge::exact {

std::string to_string(const Rational& q) {
    const BigInt den = denominator_of(q);
    if (den == 1) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + den.str();
}

Rational from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("from_double: non-finite value");
    int exponent = 0;
    const double mantissa = std::frexp(x, &exponent);
    // 53 bits of mantissa scaled to an integer.
    const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
    Rational q{BigInt(scaled)};
    const int shift = exponent - 53;
    BigInt power = 1;
    power <<= std::abs(shift);
    if (shift >= 0) {
        q *= Rational(power);
    } else {
        q /= Rational(power);
    }
    return q;
}

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace polyhodge::exact
