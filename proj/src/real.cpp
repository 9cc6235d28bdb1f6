#include "polyhodge/real.hpp"

#include <cmath>
#include <sstream>

namespace polyhodge {
namespace {

unsigned digits_for_bits(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120));
}

}  // namespace

WorkingPrecision::WorkingPrecision(unsigned bits) : previous_digits_(Real::default_precision()) {
    Real::default_precision(digits_for_bits(bits));
}

WorkingPrecision::~WorkingPrecision() { Real::default_precision(previous_digits_); }

unsigned WorkingPrecision::current_bits() {
    return static_cast<unsigned>(boost::multiprecision::detail::digits10_2_2(Real::default_precision()));
}

void set_working_precision(unsigned bits) { Real::default_precision(digits_for_bits(bits)); }

Real pi_real() {
    Real pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    return pi;
}

unsigned decimal_digits() { return Real::default_precision(); }

std::string to_decimal(const Real& x) {
    if (x == 0) return "0";
    return x.str(static_cast<std::streamsize>(decimal_digits()), std::ios_base::scientific);
}

}  // namespace polyhodge
