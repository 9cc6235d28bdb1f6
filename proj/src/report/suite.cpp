#include "polyhodge/report/suite.hpp"

#include "polyhodge/analytic/monodromy.hpp"
#include "polyhodge/analytic/path.hpp"
#include "polyhodge/analytic/polylog.hpp"
#include "polyhodge/combinat/arnold.hpp"
#include "polyhodge/combinat/paving.hpp"
#include "polyhodge/combinat/poset_homology.hpp"
#include "polyhodge/combinat/postnikov.hpp"
#include "polyhodge/derham/forms.hpp"
#include "polyhodge/errors.hpp"
#include "polyhodge/derham/quadrature.hpp"
#include "polyhodge/exact/polynomial.hpp"
#include "polyhodge/hodge/flatness.hpp"
#include "polyhodge/hodge/kummer.hpp"

#include <cstdio>
#include <numbers>

namespace polyhodge::report {

namespace {

using analytic::Complex;
using exact::Rational;
using exact::RationalMatrix;

std::string short_double(double x) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3e", x);
    return buffer;
}

CriterionResult integral_identity(const SuiteOptions&) {
    CriterionResult out{1, "integral identity", true, Json::object()};
    const std::pair<const char*, Complex> points[] = {
        {"0.3", Complex(Real("0.3"), Real(0))},
        {"-0.5", Complex(Real("-0.5"), Real(0))},
        {"0.25+0.25i", Complex(Real("0.25"), Real("0.25"))},
    };
    Real worst_li = 0, worst_one = 0;
    Json failures = Json::array();
    for (const auto& [label, z] : points)
        for (int n = 1; n <= 3; ++n)
            for (int k = 0; k <= n; ++k) {
                const Complex value = derham::integrate_cube(n, k, z, 1e-8);
                const Complex reference = k == 0 ? Complex(1) : analytic::li_series(k, z, 1e-20);
                const Real dev = (value - reference).abs();
                const bool ok = dev <= (k == 0 ? Real(1e-10) : Real(1e-6));
                Real& worst = k == 0 ? worst_one : worst_li;
                if (dev > worst) worst = dev;
                if (!ok) failures.push_back({{"z", label}, {"n", n}, {"k", k}, {"deviation", short_decimal(dev)}});
                out.pass = out.pass && ok;
            }
    out.detail["max_deviation_li"] = short_decimal(worst_li);
    out.detail["max_deviation_k0"] = short_decimal(worst_one);
    out.detail["failures"] = failures;
    return out;
}

CriterionResult flatness(const SuiteOptions& options) {
    CriterionResult out{2, "flatness", true, Json::object()};
    Json residuals = Json::object();
    for (int n = 1; n <= 4; ++n) {
        const Real r = hodge::flatness_residual(n, Real("0.5"), Real("1e-6"), options.tol);
        residuals[std::to_string(n)] = short_decimal(r);
        out.pass = out.pass && r <= Real("1e-4");
    }
    out.detail["residual_by_n"] = residuals;
    return out;
}

analytic::PathSpec square_loop_around_zero() {
    // Counterclockwise square through the base point 1/2.
    analytic::PathSpec p;
    p.base = Complex(Real("0.5"), Real(0));
    for (auto [re, im] : {std::pair{"0.5", "0.4"}, {"-0.4", "0.4"}, {"-0.4", "-0.4"}, {"0.5", "-0.4"}, {"0.5", "0"}})
        p.segments.emplace_back(analytic::LineSegment{Complex(Real(re), Real(im))});
    p.closed = true;
    return p;
}

analytic::PathSpec circle_about_one() {
    analytic::PathSpec p;
    p.base = Complex(Real("0.5"), Real(0));
    p.segments.emplace_back(analytic::ArcSegment{Complex(1), 2 * pi_real()});
    p.closed = true;
    return p;
}

CriterionResult monodromy_rationality(const SuiteOptions& options) {
    CriterionResult out{3, "monodromy rationality and unipotence", true, Json::object()};
    analytic::MonodromyOptions mo;
    mo.tol = options.tol;
    mo.reconstruction_tolerance = 1e-8;
    const std::pair<const char*, analytic::Puncture> loops[] = {{"loop0", analytic::Puncture::Zero},
                                                                 {"loop1", analytic::Puncture::One}};
    Json checks = Json::array();
    for (int n = 1; n <= 4; ++n) {
        mo.max_denominator = exact::factorial(n);
        for (const auto& [label, which] : loops) {
            const auto loop = analytic::canonical_loop(which);
            const RationalMatrix m = analytic::monodromy(n, loop, mo);
            const auto index = exact::nilpotency_index(m);
            const bool unipotent = m.is_upper_triangular() && index && *index <= n + 1;
            const auto alternative = which == analytic::Puncture::Zero ? square_loop_around_zero() : circle_about_one();
            const bool homotopy = analytic::winding_numbers(alternative) == analytic::winding_numbers(loop) &&
                                  analytic::monodromy(n, alternative, mo) == m;
            const RationalMatrix back = analytic::monodromy(n, analytic::reversed(loop), mo);
            const bool inverse = m * back == RationalMatrix::identity(n + 1);
            checks.push_back({{"n", n},
                              {"loop", label},
                              {"matrix", encode(m)},
                              {"nilpotency_index", index ? Json(*index) : Json(nullptr)},
                              {"unipotent", unipotent},
                              {"homotopy_invariant", homotopy},
                              {"inverse_loop", inverse}});
            out.pass = out.pass && unipotent && homotopy && inverse;
        }
    }
    out.detail["checks"] = checks;
    return out;
}

CriterionResult kummer_quotient(const SuiteOptions& options) {
    CriterionResult out{4, "trivial sub and Kummer quotient", true, Json::object()};
    Real worst = 0;
    Json failures = Json::array();
    for (int n = 1; n <= 4; ++n)
        for (const char* z : {"0.3", "0.5", "0.7"}) {
            const auto r = hodge::kummer_block_check(n, Real(z), 1e-10);
            if (r.max_deviation > worst) worst = r.max_deviation;
            if (!r.ok) failures.push_back({{"n", n}, {"z", z}, {"row", r.row}, {"col", r.col}});
            out.pass = out.pass && r.ok;
        }
    bool fixes = true;
    for (int n = 1; n <= 4; ++n)
        for (auto which : {analytic::Puncture::Zero, analytic::Puncture::One}) {
            analytic::MonodromyOptions mo;
            mo.tol = options.tol;
            const RationalMatrix m = analytic::monodromy(n, analytic::canonical_loop(which), mo);
            for (int r = 0; r <= n; ++r) fixes = fixes && m(r, 0) == (r == 0 ? 1 : 0);
        }
    out.pass = out.pass && fixes;
    out.detail["max_block_deviation"] = short_decimal(worst);
    out.detail["block_failures"] = failures;
    out.detail["monodromy_fixes_e0"] = fixes;
    return out;
}

CriterionResult de_rham(const SuiteOptions&) {
    CriterionResult out{5, "de Rham relations", true, Json::object()};
    Json failures = Json::array();
    int checked = 0;
    for (int n = 2; n <= 6; ++n)
        for (int k = 2; k <= n; ++k) {
            ++checked;
            if (!derham::form_recurrence_check(n, k)) {
                failures.push_back({{"n", n}, {"k", k}});
                out.pass = false;
            }
        }
    const auto gauge = derham::gauge_exactness_check();
    out.pass = out.pass && gauge.ok();
    out.detail["recurrence_pairs_checked"] = checked;
    out.detail["recurrence_failures"] = failures;
    out.detail["gauge_exact"] = gauge.exact;
    out.detail["gauge_boundary"] = gauge.boundary;
    return out;
}

CriterionResult eulerian_polynomials(const SuiteOptions&) {
    CriterionResult out{6, "Eulerian polynomials", true, Json::object()};
    using exact::RationalPolynomial;
    const RationalPolynomial x = RationalPolynomial::monomial(1, 1);
    Json rows = Json::array();
    for (unsigned r = 0; r <= 12; ++r) {
        const RationalPolynomial e = exact::eulerian(r);
        const RationalPolynomial next = exact::eulerian(r + 1);
        const RationalPolynomial step = x * (RationalPolynomial{1, -1}) * e.derivative() +
                                        RationalPolynomial{1, Rational(r)} * e;
        const bool recurrence = next == step;
        const bool at_one = e(1) == Rational(exact::factorial(r));
        // Coefficients of (1-x)^{r+1} sum_j (j+1)^r x^j up to degree r.
        bool generating = true;
        for (unsigned m = 0; m <= r; ++m) {
            exact::BigInt c = 0;
            for (unsigned j = 0; j <= m; ++j) {
                exact::BigInt term = boost::multiprecision::pow(exact::BigInt(j + 1), r);
                term *= exact::factorial(r + 1) / (exact::factorial(m - j) * exact::factorial(r + 1 - (m - j)));
                c += (m - j) % 2 == 0 ? term : exact::BigInt(-term);
            }
            generating = generating && e.coefficient(m) == Rational(c);
        }
        rows.push_back({{"r", r}, {"polynomial", e.to_string()}, {"recurrence", recurrence},
                        {"value_at_one", at_one}, {"generating_series", generating}});
        out.pass = out.pass && recurrence && at_one && generating;
    }
    out.detail["rows"] = rows;
    return out;
}

CriterionResult arnold_poset(const SuiteOptions& options) {
    CriterionResult out{7, "Arnol'd and poset homology", true, Json::object()};
    const int top = options.include_n7 ? 7 : 6;
    Json dims = Json::array();
    for (int n = 2; n <= top; ++n) {
        const int dim = combinat::arnold_dimension(n);
        const bool factorial_ok = exact::BigInt(dim) == exact::factorial(n - 1);
        Json row = {{"n", n}, {"arnold_dimension", dim}, {"equals_factorial", factorial_ok}};
        bool ok = factorial_ok;
        if (n >= 3) {
            bool concentrated = true;
            for (const auto& [degree, h] : combinat::poset_homology(n))
                concentrated = concentrated && (degree == n - 3 ? h == dim : h == 0);
            row["homology_concentrated"] = concentrated;
            ok = ok && concentrated;
        }
        if (n <= 6) {
            const bool sign_zero = combinat::sign_multiplicity(n) == 0;
            const bool induced = combinat::induced_character_check(n).matches;
            row["sign_multiplicity_zero"] = sign_zero;
            row["induced_character"] = induced;
            ok = ok && sign_zero && induced;
        }
        dims.push_back(row);
        out.pass = out.pass && ok;
    }
    Json postnikov = Json::object();
    for (int n = 1; n <= 8; ++n) {
        const bool ok = combinat::postnikov_graded_check(n).ok;
        postnikov[std::to_string(n)] = ok;
        out.pass = out.pass && ok;
    }
    out.detail["by_n"] = dims;
    out.detail["postnikov"] = postnikov;
    out.detail["n7_included"] = options.include_n7;
    return out;
}

CriterionResult paving(const SuiteOptions& options) {
    CriterionResult out{8, "paving", true, Json::object()};
    Json rows = Json::array();
    for (int n = 1; n <= 4; ++n) {
        const auto r = combinat::paving_check(n, 0.5, options.samples, options.seed);
        rows.push_back({{"n", n}, {"samples", r.samples}, {"redraws", r.redraws}, {"uncovered", r.uncovered},
                        {"overcovered", r.overcovered}, {"volume_identity", r.volume_identity}});
        out.pass = out.pass && r.ok();
    }
    out.detail["rows"] = rows;
    return out;
}

}  // namespace

std::string short_decimal(const Real& x) { return short_double(x.convert_to<double>()); }

CriterionResult run_criterion(int id, const SuiteOptions& options) {
    using Check = CriterionResult (*)(const SuiteOptions&);
    static const std::pair<const char*, Check> checks[] = {
        {"integral identity", integral_identity},
        {"flatness", flatness},
        {"monodromy rationality and unipotence", monodromy_rationality},
        {"trivial sub and Kummer quotient", kummer_quotient},
        {"de Rham relations", de_rham},
        {"Eulerian polynomials", eulerian_polynomials},
        {"Arnol'd and poset homology", arnold_poset},
        {"paving", paving},
    };
    if (id < 1 || id > kSuiteCriteria) throw DomainError("run_criterion: no criterion " + std::to_string(id));
    const auto& [title, check] = checks[id - 1];
    try {
        return check(options);
    } catch (const std::exception& e) {
        return {id, title, false, {{"error", e.what()}}};
    }
}

std::vector<CriterionResult> run_suite(const SuiteOptions& options) {
    std::vector<CriterionResult> results;
    for (int id = 1; id <= kSuiteCriteria; ++id) results.push_back(run_criterion(id, options));
    return results;
}

Json to_json(const std::vector<CriterionResult>& results) {
    Json out = Json::array();
    for (const auto& r : results)
        out.push_back({{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
    return out;
}

}  // namespace polyhodge::report
