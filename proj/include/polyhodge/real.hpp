#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace polyhodge {

// Variable-precision binary floating point. Values created on a thread pick
// up that thread's working precision at construction.
using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecisionBits = 128;

// Sets the working precision of the calling thread for the lifetime of the
// object and restores the previous setting afterwards.
class WorkingPrecision {
public:
    explicit WorkingPrecision(unsigned bits);
    ~WorkingPrecision();

    WorkingPrecision(const WorkingPrecision&) = delete;
    WorkingPrecision& operator=(const WorkingPrecision&) = delete;

    static unsigned current_bits();

private:
    unsigned previous_digits_;
};

void set_working_precision(unsigned bits);

Real pi_real();

// Decimal digits carried by a value at the current precision.
unsigned decimal_digits();

// Deterministic decimal rendering with `decimal_digits()` significant digits.
std::string to_decimal(const Real& x);

}  // namespace polyhodge
