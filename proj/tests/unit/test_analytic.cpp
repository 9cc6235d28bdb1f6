#include <doctest.h>

#include "polyhodge/analytic/monodromy.hpp"
#include "polyhodge/analytic/path.hpp"
#include "polyhodge/analytic/polylog.hpp"
#include "polyhodge/analytic/transport.hpp"
#include "polyhodge/errors.hpp"
#include "polyhodge/exact/matrix.hpp"

using namespace polyhodge;
using namespace polyhodge::analytic;
using exact::Rational;
using exact::RationalMatrix;

namespace {

Complex real_point(const char* x) { return Complex(Real(x), Real(0)); }

PathSpec square_about(double cx, double half) {
    PathSpec p;
    p.base = Complex(Real("0.5"), Real(0));
    const Real c(cx), h(half);
    // Counterclockwise square through 1/2, entered from its right edge.
    p.segments.emplace_back(LineSegment{Complex(Real("0.5"), h)});
    p.segments.emplace_back(LineSegment{Complex(c - h, h)});
    p.segments.emplace_back(LineSegment{Complex(c - h, -h)});
    p.segments.emplace_back(LineSegment{Complex(Real("0.5"), -h)});
    p.segments.emplace_back(LineSegment{Complex(Real("0.5"), Real(0))});
    p.closed = true;
    return p;
}

}  // namespace

TEST_CASE("li_series: against independent high-precision oracles") {
    WorkingPrecision wp(256);
    const Real log2 = log(Real(2));
    CHECK(abs(li_series(1, real_point("0.5"), 1e-60).real() - log2) < Real("1e-60"));
    CHECK(abs(li_series(1, real_point("0.5"), 1e-12).real() - Real("0.693147180559945")) < Real("1e-12"));
    // Landen: Li_2(x) + Li_2(x/(x-1)) = -log^2(1-x)/2 for x < 1.
    const Real x("-0.75");
    const Real y = x / (x - 1);
    const Real lhs = li_series(2, Complex(x), 1e-60).real() + li_series(2, Complex(y), 1e-60).real();
    const Real l = log(Real(1) - x);
    CHECK(abs(lhs + l * l / 2) < Real("1e-58"));
}

TEST_CASE("li_series: value at -1 lies outside the series disk") {
    CHECK_THROWS_AS(li_series(2, Complex(-1), 1e-12), DomainError);
    CHECK_THROWS_AS(li_series(1, Complex(Real("0.5"), Real("0.6")), 1e-12), DomainError);
}

TEST_CASE("li_series: zero and tail bound") {
    for (int n = 1; n <= 5; ++n) CHECK(li_series(n, Complex(0), 1e-12).abs() == 0);
    // Li_2(1/2) = pi^2/12 - log^2(2)/2.
    const Real pi = pi_real();
    const Real l2 = log(Real(2));
    const Real exact = pi * pi / 12 - l2 * l2 / 2;
    CHECK(abs(li_series(2, real_point("0.5"), 1e-12).real() - exact) <= Real("1e-12"));
    CHECK(abs(li_series(2, real_point("0.5"), 1e-30).real() - exact) <= Real("1e-30"));
}

TEST_CASE("principal_lambda: shape and entries") {
    const auto l0 = principal_lambda(0, Real("0.5"), 1e-12);
    CHECK(l0.dimension() == 1);
    CHECK(l0(0, 0) == Complex(1));

    const auto l1 = principal_lambda(1, Real("0.5"), 1e-20);
    CHECK(abs(l1(0, 1).real() - log(Real(2))) < Real("1e-19"));
    CHECK((l1(1, 1) - two_pi_i()).abs() < Real("1e-30"));

    const auto l2 = principal_lambda(2, Real("0.5"), 1e-20);
    CHECK((l2(1, 2) - two_pi_i() * Complex(-log(Real(2)))).abs() < Real("1e-30"));

    for (int n = 1; n <= 5; ++n)
        for (const char* z : {"0.2", "0.5", "0.9"}) {
            const auto l = principal_lambda(n, Real(z), 1e-15);
            for (int r = 1; r <= n; ++r) CHECK(l(r, 0).abs() == 0);
            CHECK(l(0, 0) == Complex(1));
            for (int c = 0; c < n; ++c) CHECK(l(n, c).abs() == 0);
            Complex power(1);
            for (int i = 0; i < n; ++i) power = power * two_pi_i();
            CHECK((l(n, n) - power).abs() < Real("1e-25"));
        }
    CHECK_THROWS_AS(principal_lambda(2, Real("1.5"), 1e-12), DomainError);
    CHECK_THROWS_AS(principal_lambda(2, Real(0), 1e-12), DomainError);
}

TEST_CASE("principal_lambda: continuation beyond the series disk agrees with the reflection formula") {
    // Li_2(z) + Li_2(1-z) = pi^2/6 - log z log(1-z).
    const auto a = principal_lambda(2, Real("0.9"), 1e-14);
    const auto b = principal_lambda(2, Real("0.1"), 1e-14);
    const Real pi = pi_real();
    const Real expected = pi * pi / 6 - log(Real("0.9")) * log(Real("0.1"));
    CHECK(abs(a(0, 2).real() + b(0, 2).real() - expected) < Real("1e-11"));
}

TEST_CASE("canonical loops: winding numbers and concatenation") {
    const auto l0 = canonical_loop(Puncture::Zero), l1 = canonical_loop(Puncture::One);
    CHECK(winding_numbers(l0) == std::pair{1, 0});
    CHECK(winding_numbers(l1) == std::pair{0, 1});
    CHECK(winding_numbers(concatenate(l0, reversed(l0))) == std::pair{0, 0});
    CHECK(winding_numbers(concatenate(l0, l1)) == std::pair{1, 1});
    CHECK(l0.closed);
    CHECK(abs(endpoint(l0).real() - Real("0.5")) < Real("1e-30"));
    CHECK_NOTHROW(validate(l0));
    CHECK(abs(distance_to_punctures(l0) - Real("0.25")) < Real("1e-30"));
}

TEST_CASE("path validation") {
    PathSpec p;
    p.base = real_point("0.5");
    p.segments.emplace_back(LineSegment{Complex(Real("-0.5"), Real(0))});
    CHECK_THROWS_AS(validate(p), DomainError);  // passes through 0

    PathSpec open = canonical_loop(Puncture::Zero);
    open.segments.pop_back();
    CHECK_THROWS_AS(validate(open), DomainError);  // flagged closed but does not return
}

TEST_CASE("transport: n = 1 around 1 and around 0") {
    const double tol = 1e-12;
    const auto start = principal_lambda(1, Real("0.5"), tol);
    const auto around_one = transport(1, canonical_loop(Puncture::One), start, tol);
    CHECK((around_one(0, 0) - Complex(1)).abs() < Real("1e-11"));
    CHECK((around_one(0, 1) - (start(0, 1) - two_pi_i())).abs() < Real("1e-10"));
    CHECK((around_one(1, 1) - two_pi_i()).abs() < Real("1e-10"));
    CHECK(around_one(1, 0).abs() == 0);

    const auto around_zero = transport(1, canonical_loop(Puncture::Zero), start, tol);
    CHECK(max_abs_difference(around_zero.entries, start.entries) < Real("1e-10"));
}

TEST_CASE("transport: contractible loop returns the start") {
    const double tol = 1e-12;
    const PathSpec square = square_about(0.5, 0.2);  // encloses neither puncture
    CHECK(winding_numbers(square) == std::pair{0, 0});
    for (int n = 1; n <= 3; ++n) {
        const auto start = principal_lambda(n, Real("0.5"), tol);
        const auto end = transport(n, square, start, tol);
        CHECK(max_abs_difference(end.entries, start.entries) <= Real(10 * tol) * (1 + start.entries.max_abs()));
    }
}

TEST_CASE("transport: composition over concatenated paths") {
    const double tol = 1e-12;
    const auto start = principal_lambda(3, Real("0.5"), tol);
    const auto a = canonical_loop(Puncture::Zero), b = canonical_loop(Puncture::One);
    const auto joint = transport(3, concatenate(a, b), start, tol);
    const auto stepwise = transport(3, b, transport(3, a, start, tol), tol);
    CHECK(max_abs_difference(joint.entries, stepwise.entries) <= Real(10 * tol) * joint.entries.max_abs());
}

TEST_CASE("transport: step underflow reports the arclength") {
    PathSpec p;
    p.base = real_point("0.5");
    p.segments.emplace_back(LineSegment{Complex(Real("1e-6"), Real(0))});
    TransportOptions options;
    options.path_margin = 1e-9;
    options.min_step = 1e-3;
    const auto start = principal_lambda(1, Real("0.5"), 1e-12);
    try {
        transport(1, p, start, options);
        FAIL("expected IntegrationError");
    } catch (const IntegrationError& e) {
        CHECK(e.arclength() > 0.0);
        CHECK(e.arclength() < 0.5);
    }
}

TEST_CASE("monodromy: examples") {
    CHECK(monodromy(1, canonical_loop(Puncture::One), 1e-12) == RationalMatrix({{1, -1}, {0, 1}}));
    CHECK(monodromy(1, canonical_loop(Puncture::Zero), 1e-12) == RationalMatrix::identity(2));
    RationalMatrix expected = RationalMatrix::identity(3);
    expected(1, 2) = 1;
    CHECK(monodromy(2, canonical_loop(Puncture::Zero), 1e-12) == expected);
}

TEST_CASE("monodromy: loop around 0 is exp of the log nilpotent") {
    // Independent oracle: rows i >= 1 hold (2 pi i)^i log^{j-i}/(j-i)!, so
    // log -> log + 2 pi i multiplies by exp(N) with N the shift on rows >= 1.
    for (int n = 1; n <= 4; ++n) {
        RationalMatrix expected = RationalMatrix::identity(n + 1);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) expected(i, j) = Rational(1) / Rational(exact::factorial(j - i));
        CHECK(monodromy(n, canonical_loop(Puncture::Zero), 1e-12) == expected);
        // Around 1 only Li_1 jumps: row 0 picks up -row 1.
        RationalMatrix around_one = RationalMatrix::identity(n + 1);
        around_one(0, 1) = -1;
        CHECK(monodromy(n, canonical_loop(Puncture::One), 1e-12) == around_one);
    }
}

TEST_CASE("monodromy: unipotence, homotopy invariance and inverse loops") {
    const PathSpec wide_zero = square_about(-0.1, 0.45);
    for (int n = 1; n <= 3; ++n)
        for (auto which : {Puncture::Zero, Puncture::One}) {
            const auto loop = canonical_loop(which);
            const auto m = monodromy(n, loop, 1e-12);
            const auto index = exact::nilpotency_index(m);
            REQUIRE(index.has_value());
            CHECK(*index <= n + 1);
            CHECK(m.is_upper_triangular());
            CHECK(m * monodromy(n, reversed(loop), 1e-12) == RationalMatrix::identity(n + 1));
        }
    REQUIRE(winding_numbers(wide_zero) == std::pair{1, 0});
    for (int n = 1; n <= 3; ++n)
        CHECK(monodromy(n, wide_zero, 1e-12) == monodromy(n, canonical_loop(Puncture::Zero), 1e-12));
}

TEST_CASE("monodromy: too tight a denominator bound is a reconstruction error") {
    MonodromyOptions options;
    options.max_denominator = exact::BigInt(1);
    CHECK_THROWS_AS(monodromy(3, canonical_loop(Puncture::Zero), options), ReconstructionError);
}

TEST_CASE("monodromy: open paths are rejected") {
    PathSpec p;
    p.base = real_point("0.5");
    p.segments.emplace_back(LineSegment{real_point("0.25")});
    CHECK_THROWS_AS(monodromy(1, p, 1e-12), DomainError);
}
