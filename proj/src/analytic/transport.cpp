#include "polyhodge/analytic/transport.hpp"

#include "polyhodge/errors.hpp"
#include "polyhodge/hodge/connection.hpp"
#include "segment_geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace polyhodge::analytic {
namespace {

// Dormand-Prince 5(4) tableau.
struct Tableau {
    std::array<Real, 7> c;
    std::array<std::array<Real, 6>, 7> a;
    std::array<Real, 7> b;      // fifth order, FSAL
    std::array<Real, 7> error;  // b - b*

    Tableau() {
        auto q = [](long p, long d) { return Real(p) / Real(d); };
        c = {Real(0), q(1, 5), q(3, 10), q(4, 5), q(8, 9), Real(1), Real(1)};
        for (auto& row : a) row.fill(Real(0));
        a[1] = {q(1, 5)};
        a[2] = {q(3, 40), q(9, 40)};
        a[3] = {q(44, 45), q(-56, 15), q(32, 9)};
        a[4] = {q(19372, 6561), q(-25360, 2187), q(64448, 6561), q(-212, 729)};
        a[5] = {q(9017, 3168), q(-355, 33), q(46732, 5247), q(49, 176), q(-5103, 18656)};
        a[6] = {q(35, 384), Real(0), q(500, 1113), q(125, 192), q(-2187, 6784), q(11, 84)};
        b = {q(35, 384), Real(0), q(500, 1113), q(125, 192), q(-2187, 6784), q(11, 84), Real(0)};
        const std::array<Real, 7> b_star = {q(5179, 57600),  Real(0),          q(7571, 16695), q(393, 640),
                                            q(-92097, 339200), q(187, 2100), q(1, 40)};
        for (int i = 0; i < 7; ++i) error[i] = b[i] - b_star[i];
    }
};

using State = std::vector<Complex>;

struct ConnectionEntry {
    int row;
    int col;
    hodge::OneForm form;
};

class RightHandSide {
public:
    explicit RightHandSide(int n) : dim_(n + 1) {
        const hodge::ConnectionMatrix omega = hodge::connection(n);
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c)
                if (omega(r, c) != hodge::OneForm::Zero) entries_.push_back({r, c, omega(r, c)});
    }

    // Y Omega(z) z' for the row-major state Y.
    State operator()(const State& y, const Complex& z, const Complex& dz) const {
        const Complex over_z = dz / z;
        const Complex over_one_minus_z = dz / (Complex(1) - z);
        State out(y.size());
        for (const auto& e : entries_) {
            const Complex& coef = e.form == hodge::OneForm::DzOverZ ? over_z : over_one_minus_z;
            for (int r = 0; r < dim_; ++r) {
                const Complex& x = y[static_cast<std::size_t>(r) * dim_ + e.row];
                if (x.real() == 0 && x.imag() == 0) continue;
                out[static_cast<std::size_t>(r) * dim_ + e.col] += x * coef;
            }
        }
        return out;
    }

private:
    int dim_;
    std::vector<ConnectionEntry> entries_;
};

Real distance_to_punctures(const Complex& z) {
    return std::min(z.abs(), (z - Complex(1)).abs());
}

}  // namespace

PeriodMatrix transport(int n, const PathSpec& path, const PeriodMatrix& start, const TransportOptions& options) {
    if (n < 1) throw DomainError("transport: n must be positive");
    if (start.n != n) throw DomainError("transport: start matrix has the wrong weight");
    if (!(options.tol > 0)) throw DomainError("transport: tol must be positive");
    validate(path, options.path_margin);

    static thread_local unsigned cached_digits = 0;
    static thread_local Tableau tableau;
    if (cached_digits != Real::default_precision()) {
        tableau = Tableau();
        cached_digits = Real::default_precision();
    }

    const int dim = n + 1;
    const RightHandSide rhs(n);
    State y(static_cast<std::size_t>(dim) * dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) y[static_cast<std::size_t>(r) * dim + c] = start.entries(r, c);

    const Real tol(options.tol);
    const Real min_step(options.min_step);
    Real travelled = 0;
    for (const auto& seg : detail::geometry(path)) {
        Real s = 0;
        Real h = std::min(seg.length, Real(0.01));
        std::array<State, 7> k;
        k[0] = rhs(y, seg.point(s), seg.tangent(s));
        State candidate;
        while (s < seg.length) {
            const Real cap = distance_to_punctures(seg.point(s)) / 4;
            if (h > cap) h = cap;
            const Real remaining = seg.length - s;
            if (h > remaining) h = remaining;
            if (h < min_step && h < remaining)
                throw IntegrationError("transport: step size underflow", (travelled + s).convert_to<double>());

            for (int stage = 1; stage < 7; ++stage) {
                State tmp = y;
                for (int j = 0; j < stage; ++j) {
                    if (tableau.a[stage][j] == 0) continue;
                    const Real w = h * tableau.a[stage][j];
                    for (std::size_t e = 0; e < tmp.size(); ++e) tmp[e] += k[j][e] * w;
                }
                const Real t = stage == 6 ? Real(s + h) : Real(s + tableau.c[stage] * h);
                k[stage] = rhs(tmp, seg.point(t), seg.tangent(t));
                // The last stage is taken at the fifth-order solution.
                if (stage == 6) candidate = std::move(tmp);
            }

            Real scale = 1;
            for (const auto& v : candidate) scale = std::max(scale, v.abs());
            Real err = 0;
            for (std::size_t e = 0; e < candidate.size(); ++e) {
                Complex diff;
                for (int j = 0; j < 7; ++j)
                    if (tableau.error[j] != 0) diff += k[j][e] * tableau.error[j];
                err = std::max(err, diff.abs());
            }
            err = err * h / scale;

            const double ratio = err == 0 ? 0.0 : (err / (tol * h)).convert_to<double>();
            if (ratio <= 1.0) {
                y.swap(candidate);
                s += h;
                k[0] = k[6];
            }
            double growth = 0.2;
            if (ratio == 0.0) {
                growth = 5.0;
            } else if (std::isfinite(ratio)) {
                growth = std::clamp(0.9 * std::pow(ratio, -0.25), 0.2, 5.0);
            }
            h *= growth;
            if (!(ratio <= 1.0) && h < min_step)
                throw IntegrationError("transport: step size underflow", (travelled + s).convert_to<double>());
        }
        travelled += seg.length;
    }

    PeriodMatrix out{n, ComplexMatrix(dim), start.branch + " -> " + describe(path)};
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) out.entries(r, c) = y[static_cast<std::size_t>(r) * dim + c];
    if (!out.entries.is_finite()) throw IntegrationError("transport: non-finite result", travelled.convert_to<double>());
    return out;
}

PeriodMatrix transport(int n, const PathSpec& path, const PeriodMatrix& start, double tol) {
    TransportOptions options;
    options.tol = tol;
    return transport(n, path, start, options);
}

}  // namespace polyhodge::analytic
