#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace polyhodge::exact {

// GMP-backed arbitrary size integers and canonical fractions. mpq keeps
// gcd(|num|, den) = 1 and den > 0 after every operation.
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Exact value of a finite double (every double is a dyadic rational).
Rational from_double(double x);

BigInt factorial(unsigned n);

}  // namespace polyhodge::exact
