#pragma once

#include "polyhodge/derham/rational_function.hpp"

namespace polyhodge::derham {

// omega_n^(0) = dt_1...dt_n and, for 1 <= k <= n,
// omega_n^(k) = z E_{n-k}(z t_1...t_n) / (1 - z t_1...t_n)^{n-k+1} dt_1...dt_n.
RationalForm omega(int n, int k);

// Same as omega(n, k) for k >= 1 but with an arbitrary denominator exponent.
RationalForm omega_with_exponent(int n, int k, unsigned exponent);

// z t_1 ... t_n in n+1 variables.
MultiPolynomial product_variable(int n);

// Numerator of omega_n^(k) as a polynomial in x = z t_1...t_n, divided by z
// (the Eulerian polynomial E_{n-k}); 1 for k = 0.
exact::RationalPolynomial omega_numerator_in_x(int n, int k);

// d/dz of the coefficient, keeping the volume form.
RationalForm partial_z(const RationalForm& form);

RationalForm scale(const RationalForm& form, const RationalFunction& factor);

// d/dz upper == (1/z) lower, exactly.
bool recurrence_holds(const RationalForm& upper, const RationalForm& lower);

// d/dz omega_n^(k) == (1/z) omega_n^(k-1) and d/dz omega_n^(0) == 0.
// Requires 2 <= k <= n.
bool form_recurrence_check(int n, int k);

// nu = -(z/(1-z)) t(1-t)/(1-zt) in the variables (z, t).
RationalFunction gauge_form();

struct GaugeReport {
    bool exact = false;       // d/dz omega_1^(1) - omega_1^(0)/(1-z) == d nu / dt
    bool boundary = false;    // nu(t=0) == nu(t=1) == 0
    bool ok() const { return exact && boundary; }
};

GaugeReport gauge_exactness_check(const RationalFunction& nu);
GaugeReport gauge_exactness_check();

}  // namespace polyhodge::derham
