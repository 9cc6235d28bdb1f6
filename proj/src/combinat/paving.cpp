#include "polyhodge/combinat/paving.hpp"

#include "polyhodge/errors.hpp"
#include "polyhodge/exact/polynomial.hpp"

#include <random>

namespace polyhodge::combinat {

Rational ordered_simplex_volume(int n, const Rational& a, const Rational& b) {
    if (n < 0) throw DomainError("ordered_simplex_volume: negative dimension");
    // g_k(t) = volume of {a <= x_1 <= ... <= x_k <= t}.
    exact::RationalPolynomial g = exact::RationalPolynomial::constant(1);
    for (int k = 0; k < n; ++k) {
        const exact::RationalPolynomial primitive = g.antiderivative();
        g = primitive - exact::RationalPolynomial::constant(primitive(a));
    }
    return g(b);
}

PavingReport paving_check(int n, double z, long long samples, std::uint64_t seed,
                          const std::optional<std::vector<Permutation>>& family) {
    if (n < 1 || n > 6) throw DomainError("paving_check: need 1 <= n <= 6");
    if (!(z > 0.0 && z < 1.0)) throw DomainError("paving_check: need 0 < z < 1");
    if (samples < 0) throw DomainError("paving_check: negative sample count");
    const std::vector<Permutation> sigmas = family ? *family : all_permutations(n);
    std::vector<Permutation> inverses;
    for (const auto& s : sigmas) {
        if (static_cast<int>(s.size()) != n) throw DomainError("paving_check: permutation of wrong size");
        inverses.push_back(inverse(s));
    }

    PavingReport report;
    report.n = n;
    report.samples = samples;
    std::mt19937_64 engine(seed);
    const double lo = 1.0, hi = 1.0 / z;
    auto uniform = [&]() {
        for (;;) {
            const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
            const double x = lo + (hi - lo) * u;
            if (x > lo && x < hi) return x;
        }
    };
    std::vector<double> x(n);
    for (long long s = 0; s < samples; ++s) {
        for (;;) {
            for (auto& xi : x) xi = uniform();
            bool tie = false;
            for (int i = 0; i < n && !tie; ++i)
                for (int j = i + 1; j < n && !tie; ++j) tie = x[i] == x[j];
            if (!tie) break;
            ++report.redraws;
        }
        int hits = 0;
        for (const auto& inv : inverses) {
            bool inside = true;
            for (int i = 0; i + 1 < n && inside; ++i) inside = x[inv[i]] < x[inv[i + 1]];
            if (inside) ++hits;
        }
        if (hits == 0) ++report.uncovered;
        if (hits > 1) ++report.overcovered;
    }

    const Rational a = 1, b = Rational(1) / exact::from_double(z);
    Rational cube = 1;
    for (int i = 0; i < n; ++i) cube *= b - a;
    report.volume_identity = Rational(exact::factorial(n)) * ordered_simplex_volume(n, a, b) == cube;
    return report;
}

}  // namespace polyhodge::combinat
