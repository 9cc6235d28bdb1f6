#include "polyhodge/exact/reconstruct.hpp"

#include <stdexcept>

namespace polyhodge::exact {

std::optional<Rational> rational_reconstruct(const Real& x, const BigInt& max_denominator,
                                             const Real& tolerance) {
    if (max_denominator < 1) throw std::invalid_argument("rational_reconstruct: max_denominator < 1");
    if (tolerance <= 0) throw std::invalid_argument("rational_reconstruct: tolerance <= 0");
    if (!boost::multiprecision::isfinite(x)) return std::nullopt;

    // Convergent recurrences p_k = a_k p_{k-1} + p_{k-2}, same for q.
    BigInt p_prev = 0, q_prev = 1;
    BigInt p = 1, q = 0;
    Real rest = x;
    // The continued fraction of a binary float terminates; 4096 partial
    // quotients is far beyond any precision we run at.
    for (int step = 0; step < 4096; ++step) {
        const Real floor_rest = floor(rest);
        const BigInt a(floor_rest.convert_to<BigInt>());
        const BigInt p_next = a * p + p_prev;
        const BigInt q_next = a * q + q_prev;
        if (q_next > max_denominator) break;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;

        const Rational candidate(p, q);
        const Real approx = Real(p) / Real(q);
        if (abs(x - approx) <= tolerance) return candidate;

        const Real frac = rest - floor_rest;
        if (frac == 0) break;
        rest = 1 / frac;
    }
    return std::nullopt;
}

}  // namespace polyhodge::exact
