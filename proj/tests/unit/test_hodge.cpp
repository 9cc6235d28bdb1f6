#include <doctest.h>

#include "polyhodge/analytic/monodromy.hpp"
#include "polyhodge/analytic/polylog.hpp"
#include "polyhodge/analytic/transport.hpp"
#include "polyhodge/errors.hpp"
#include "polyhodge/hodge/connection.hpp"
#include "polyhodge/hodge/filtration.hpp"
#include "polyhodge/hodge/flatness.hpp"
#include "polyhodge/hodge/kummer.hpp"

using namespace polyhodge;
using namespace polyhodge::hodge;
using analytic::Complex;

TEST_CASE("connection: shape") {
    const auto c0 = connection(0);
    CHECK(c0.dimension() == 1);
    CHECK(c0(0, 0) == OneForm::Zero);

    const auto c1 = connection(1);
    CHECK(c1(0, 1) == OneForm::DzOverOneMinusZ);
    CHECK(c1(0, 0) == OneForm::Zero);
    CHECK(c1(1, 0) == OneForm::Zero);
    CHECK(c1(1, 1) == OneForm::Zero);

    const auto c3 = connection(3);
    CHECK(c3(0, 1) == OneForm::DzOverOneMinusZ);
    CHECK(c3(1, 2) == OneForm::DzOverZ);
    CHECK(c3(2, 3) == OneForm::DzOverZ);
    for (int n = 0; n <= 6; ++n) {
        const auto c = connection(n);
        for (int r = 0; r <= n; ++r)
            for (int col = 0; col <= n; ++col)
                if (col != r + 1) CHECK(c(r, col) == OneForm::Zero);
    }
    CHECK_THROWS_AS(connection(-1), DomainError);
}

TEST_CASE("evaluate_connection: examples") {
    const auto a = evaluate_connection(connection(1), Complex(Real("0.5")));
    CHECK(a(0, 1) == Complex(2));
    const auto b = evaluate_connection(connection(2), Complex(2));
    CHECK(b(0, 1) == Complex(-1));
    CHECK(b(1, 2) == Complex(Real("0.5")));
    CHECK(b(0, 2) == Complex(0));
    CHECK_THROWS_AS(evaluate_connection(connection(1), Complex(0)), DomainError);
    CHECK_THROWS_AS(evaluate_connection(connection(1), Complex(1)), DomainError);
}

TEST_CASE("flatness: finite differences match L Omega") {
    for (int n = 1; n <= 4; ++n) CHECK(flatness_residual(n, Real("0.5"), Real("1e-6"), 1e-12) <= Real("1e-4"));
    CHECK_THROWS_AS(flatness_residual(2, Real("0.5"), Real("0.6"), 1e-12), DomainError);
}

TEST_CASE("filtration: graded dimensions") {
    for (int n = 0; n <= 4; ++n) {
        const FilteredFiber fiber(analytic::principal_lambda(n, Real("0.5"), 1e-12));
        const auto graded = graded_dimensions(fiber);
        REQUIRE(static_cast<int>(graded.size()) == n + 1);
        int total = 0;
        for (int k = 0; k <= n; ++k) {
            CHECK(graded[k].first == 2 * k);
            CHECK(graded[k].second == 1);
            total += graded[k].second;
        }
        CHECK(total == n + 1);
        for (int k = 0; k <= n; ++k) {
            CHECK(span_rank(fiber.weight_step(k)) == k + 1);
            CHECK(span_rank(fiber.hodge_step(k)) == n + 1 - k);
        }
    }
}

TEST_CASE("filtration: pure Tate graded pieces") {
    CHECK(hodge_transversality_check(FilteredFiber(analytic::principal_lambda(1, Real("0.5"), 1e-12))).pure);
    CHECK(hodge_transversality_check(FilteredFiber(analytic::principal_lambda(2, Real("0.5"), 1e-12))).pure);
    for (int n = 1; n <= 4; ++n)
        for (const char* z : {"0.3", "0.7"})
            CHECK(hodge_transversality_check(FilteredFiber(analytic::principal_lambda(n, Real(z), 1e-12))).pure);

    const FilteredFiber fiber(analytic::principal_lambda(2, Real("0.5"), 1e-12));
    const auto degenerate = fiber.with_column_replaced(1, 0);
    const auto report = hodge_transversality_check(degenerate);
    CHECK_FALSE(report.pure);
    CHECK(report.failing_step >= 0);
}

TEST_CASE("filtration: purity survives continuation along the canonical loops") {
    for (int n = 1; n <= 3; ++n)
        for (auto which : {analytic::Puncture::Zero, analytic::Puncture::One}) {
            const auto start = analytic::principal_lambda(n, Real("0.5"), 1e-12);
            const auto moved = analytic::transport(n, analytic::canonical_loop(which), start, 1e-12);
            CHECK(hodge_transversality_check(FilteredFiber(moved)).pure);
        }
}

TEST_CASE("span_rank: relative threshold") {
    const std::vector<std::vector<Complex>> cols = {{Complex(1000), Complex(0)}, {Complex(0), Complex(Real("1e-3"))}};
    CHECK(span_rank(cols) == 2);
    const std::vector<std::vector<Complex>> dependent = {{Complex(1), Complex(2)}, {Complex(2), Complex(4)}};
    CHECK(span_rank(dependent) == 1);
}

TEST_CASE("kummer block: matches the lower-right block") {
    for (int n = 1; n <= 4; ++n)
        for (const char* z : {"0.3", "0.5", "0.7"}) CHECK(kummer_block_check(n, Real(z), 1e-10).ok);

    const auto b1 = twisted_kummer_block(1, Real("0.5"));
    CHECK((b1(0, 0) - analytic::two_pi_i()).abs() < Real("1e-30"));

    // n = 2 by hand: [[2 pi i, 2 pi i log z], [0, (2 pi i)^2]].
    const auto b2 = twisted_kummer_block(2, Real("0.5"));
    const Complex tpi = analytic::two_pi_i();
    const Complex log_half(log(Real("0.5")));
    CHECK((b2(0, 0) - tpi).abs() < Real("1e-30"));
    CHECK((b2(0, 1) - tpi * log_half).abs() < Real("1e-30"));
    CHECK(b2(1, 0).abs() < Real("1e-30"));
    CHECK((b2(1, 1) - tpi * tpi).abs() < Real("1e-30"));

    // n = 3 by hand: entry (0, 2) is 2 pi i log^2 z / 2.
    const auto b3 = twisted_kummer_block(3, Real("0.5"));
    CHECK((b3(0, 2) - tpi * log_half * log_half / Real(2)).abs() < Real("1e-30"));
    CHECK((b3(1, 2) - tpi * tpi * log_half).abs() < Real("1e-30"));
}

TEST_CASE("kummer: symmetric power is multiplicative") {
    const auto a = kummer_matrix(Real("0.3"));
    const auto b = kummer_matrix(Real("0.6"));
    for (int m = 0; m <= 3; ++m) {
        const auto lhs = symmetric_power(a * b, m);
        const auto rhs = symmetric_power(a, m) * symmetric_power(b, m);
        CHECK(analytic::max_abs_difference(lhs, rhs) < Real("1e-25"));
    }
}

TEST_CASE("monodromy preserves the weight flag and fixes e0") {
    for (int n = 1; n <= 4; ++n)
        for (auto which : {analytic::Puncture::Zero, analytic::Puncture::One}) {
            const auto m = analytic::monodromy(n, analytic::canonical_loop(which), 1e-12);
            CHECK(m.is_upper_triangular());
            for (int r = 0; r <= n; ++r) CHECK(m(r, 0) == (r == 0 ? 1 : 0));
        }
}
