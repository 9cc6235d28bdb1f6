#pragma once

#include "polyhodge/combinat/symmetric_group.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace polyhodge::combinat {

struct PavingReport {
    int n = 0;
    long long samples = 0;
    long long redraws = 0;
    long long uncovered = 0;     // points in no simplex
    long long overcovered = 0;   // points in two or more simplices
    bool volume_identity = false;
    bool ok() const { return uncovered == 0 && overcovered == 0 && volume_identity; }
};

// Seeded uniform sampling of the open cube (1, 1/z)^n: each point must lie in
// exactly one open simplex 1 < x_{s^-1(1)} < ... < x_{s^-1(n)} < 1/z of the
// family (all of S_n by default). Points with tied coordinates are redrawn.
// Also checks n! vol(simplex) = vol(cube) with exact iterated integration.
PavingReport paving_check(int n, double z, long long samples, std::uint64_t seed,
                          const std::optional<std::vector<Permutation>>& family = std::nullopt);

// Exact volume of {a <= x_1 <= ... <= x_n <= b} by iterated integration.
Rational ordered_simplex_volume(int n, const Rational& a, const Rational& b);

}  // namespace polyhodge::combinat
