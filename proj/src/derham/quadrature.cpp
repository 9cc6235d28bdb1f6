#include "polyhodge/derham/quadrature.hpp"

#include "polyhodge/derham/forms.hpp"
#include "polyhodge/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace polyhodge::derham {

const GaussLegendreRule& gauss_legendre(int order) {
    if (order < 1) throw DomainError("gauss_legendre: order must be positive");
    static std::mutex mutex;
    static std::map<int, GaussLegendreRule> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(order); it != cache.end()) return it->second;

    GaussLegendreRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const long double pi = std::acos(-1.0L);
    for (int i = 0; i < (order + 1) / 2; ++i) {
        long double x = std::cos(pi * (i + 0.75L) / (order + 0.5L));
        long double derivative = 0;
        for (int iter = 0; iter < 100; ++iter) {
            // Three-term recurrence for P_order(x) and its derivative.
            long double p0 = 1, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            derivative = order * (x * p1 - p0) / (x * x - 1);
            const long double dx = p1 / derivative;
            x -= dx;
            if (std::fabs(dx) < 1e-19L) break;
        }
        const long double w = 2 / ((1 - x * x) * derivative * derivative);
        // Map [-1, 1] to [0, 1]; nodes ascending.
        rule.nodes[i] = static_cast<double>((1 - x) / 2);
        rule.nodes[order - 1 - i] = static_cast<double>((1 + x) / 2);
        rule.weights[i] = rule.weights[order - 1 - i] = static_cast<double>(w / 2);
    }
    return cache.emplace(order, std::move(rule)).first->second;
}

std::complex<double> tensor_gauss_legendre(const CubeIntegrand& f, int dim, int order) {
    if (dim < 1) throw DomainError("tensor_gauss_legendre: dimension must be positive");
    const GaussLegendreRule& rule = gauss_legendre(order);
    std::vector<int> index(dim, 0);
    std::vector<double> point(dim, rule.nodes[0]);
    std::complex<double> sum = 0.0;
    for (;;) {
        double weight = 1.0;
        for (int d = 0; d < dim; ++d) weight *= rule.weights[index[d]];
        sum += weight * f(point);
        int d = dim - 1;
        while (d >= 0 && ++index[d] == order) {
            index[d] = 0;
            point[d] = rule.nodes[0];
            --d;
        }
        if (d < 0) break;
        point[d] = rule.nodes[index[d]];
    }
    return sum;
}

namespace {

double distance_to_cut(const std::complex<double>& z) {
    if (z.real() >= 1.0) return std::fabs(z.imag());
    return std::abs(z - 1.0);
}

}  // namespace

CubeIntegral integrate_cube_detailed(int n, int k, const analytic::Complex& z, double tol) {
    if (n < 1 || n > 4) throw DomainError("integrate_cube: need 1 <= n <= 4");
    if (k < 0 || k > n) throw DomainError("integrate_cube: need 0 <= k <= n");
    if (!(tol > 0)) throw DomainError("integrate_cube: tol must be positive");
    const std::complex<double> zc = z.to_std();
    if (distance_to_cut(zc) < 0.05) throw DomainError("integrate_cube: z is within 0.05 of [1, inf)");

    const RationalFunction coefficient = omega(n, k).coefficient;
    std::vector<std::complex<double>> point(n + 1);
    point[0] = zc;
    const CubeIntegrand integrand = [&](std::span<const double> t) {
        for (int i = 0; i < n; ++i) point[i + 1] = t[i];
        return coefficient.evaluate(point);
    };

    CubeIntegral result;
    std::complex<double> previous = tensor_gauss_legendre(integrand, n, 4);
    for (int order = 8; order <= kMaxQuadratureOrder; order *= 2) {
        if (std::pow(static_cast<double>(order), n) > kMaxQuadraturePoints)
            throw NumericalError("integrate_cube: no convergence within " + std::to_string(order / 2) +
                                 " points per axis (point budget)");
        const std::complex<double> current = tensor_gauss_legendre(integrand, n, order);
        result.value = current;
        result.order = order;
        result.last_difference = std::abs(current - previous);
        if (result.last_difference <= tol) return result;
        previous = current;
    }
    throw NumericalError("integrate_cube: no convergence at order " + std::to_string(kMaxQuadratureOrder) +
                         " per axis");
}

analytic::Complex integrate_cube(int n, int k, const analytic::Complex& z, double tol) {
    const CubeIntegral r = integrate_cube_detailed(n, k, z, tol);
    return {Real(r.value.real()), Real(r.value.imag())};
}

}  // namespace polyhodge::derham
