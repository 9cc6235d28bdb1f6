#pragma once

#include "polyhodge/analytic/complex.hpp"

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace polyhodge::derham {

struct GaussLegendreRule {
    std::vector<double> nodes;    // on [0, 1]
    std::vector<double> weights;  // sum to 1
};

// Gauss-Legendre rule of the given order mapped to [0, 1].
const GaussLegendreRule& gauss_legendre(int order);

using CubeIntegrand = std::function<std::complex<double>(std::span<const double>)>;

// Tensor-product rule of `order` points per axis over [0, 1]^dim. Node
// contributions are accumulated in a fixed lexicographic order.
std::complex<double> tensor_gauss_legendre(const CubeIntegrand& f, int dim, int order);

struct CubeIntegral {
    std::complex<double> value;
    int order = 0;
    double last_difference = 0.0;
};

inline constexpr int kMaxQuadratureOrder = 256;
// Caps order^n; with n = 4 the last order tried is 64.
inline constexpr double kMaxQuadraturePoints = 16777216.0;

// Integral of omega_n^(k) over [0, 1]^n at parameter z, doubling the order
// per axis from 4 until two successive results agree within tol. Requires
// 1 <= n <= 4, 0 <= k <= n and z at distance >= 0.05 from [1, inf).
CubeIntegral integrate_cube_detailed(int n, int k, const analytic::Complex& z, double tol);
analytic::Complex integrate_cube(int n, int k, const analytic::Complex& z, double tol);

}  // namespace polyhodge::derham
