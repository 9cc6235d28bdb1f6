#include <doctest.h>

#include "polyhodge/exact/matrix.hpp"
#include "polyhodge/exact/polynomial.hpp"
#include "polyhodge/exact/rational.hpp"
#include "polyhodge/exact/reconstruct.hpp"

#include <random>

using namespace polyhodge;
using exact::BigInt;
using exact::Rational;
using exact::RationalMatrix;
using exact::RationalPolynomial;

namespace {

// Eulerian numbers by the explicit alternating sum.
BigInt eulerian_number(unsigned r, unsigned m) {
    BigInt sum = 0;
    for (unsigned j = 0; j <= m; ++j) {
        BigInt term = exact::factorial(r + 1) / (exact::factorial(j) * exact::factorial(r + 1 - j));
        term *= boost::multiprecision::pow(BigInt(m + 1 - j), r);
        sum += j % 2 == 0 ? term : BigInt(-term);
    }
    return sum;
}

}  // namespace

TEST_CASE("rationals: canonical form and printing") {
    CHECK(exact::to_string(Rational(6, 4)) == "3/2");
    CHECK(exact::to_string(Rational(-4, 2)) == "-2");
    CHECK(exact::from_double(0.375) == Rational(3, 8));
    CHECK(exact::factorial(0) == 1);
    CHECK(exact::factorial(20) == BigInt("2432902008176640000"));
    // No fixed-width overflow.
    CHECK(exact::factorial(25) == BigInt("15511210043330985984000000"));
}

TEST_CASE("eulerian: small cases") {
    CHECK(exact::eulerian(0) == RationalPolynomial{1});
    CHECK(exact::eulerian(1) == RationalPolynomial{1});
    CHECK(exact::eulerian(2) == RationalPolynomial{1, 1});
    CHECK(exact::eulerian(3) == RationalPolynomial{1, 4, 1});
    CHECK(exact::eulerian(4) == RationalPolynomial{1, 11, 11, 1});
}

TEST_CASE("eulerian: degree, value at one, symmetry, explicit coefficients") {
    for (unsigned r = 0; r <= 12; ++r) {
        const RationalPolynomial e = exact::eulerian(r);
        CHECK(e.degree() == (r == 0 ? 0 : static_cast<int>(r) - 1));
        CHECK(e(1) == Rational(exact::factorial(r)));
        if (r >= 1) {
            for (int i = 0; i <= e.degree(); ++i) {
                CHECK(e.coefficient(i) > 0);
                CHECK(e.coefficient(i) == e.coefficient(e.degree() - i));
                CHECK(e.coefficient(i) == Rational(eulerian_number(r, i)));
            }
        }
    }
}

TEST_CASE("polynomial: calculus and arithmetic") {
    const RationalPolynomial p{1, 2, 3};
    CHECK(p.derivative() == RationalPolynomial{2, 6});
    CHECK(p.antiderivative() == RationalPolynomial{0, 1, 1, 1});
    CHECK(p.antiderivative().derivative() == p);
    CHECK((p * RationalPolynomial{1, -1}) == RationalPolynomial{1, 1, 1, -3});
    CHECK((p - p).is_zero());
    CHECK(RationalPolynomial().degree() == -1);
    CHECK(p(Rational(1, 2)) == Rational(11, 4));
}

TEST_CASE("rational_reconstruct: examples") {
    const Real tol("1e-9");
    CHECK(exact::rational_reconstruct(Real("0.500000000"), 10, tol) == Rational(1, 2));
    CHECK(exact::rational_reconstruct(Real("-1.000000000"), 10, tol) == Rational(-1));
    CHECK_FALSE(exact::rational_reconstruct(Real("3.14159265358979"), 10, tol).has_value());
    CHECK(exact::rational_reconstruct(Real(0), 1, tol) == Rational(0));
}

TEST_CASE("rational_reconstruct: all p/q with |p|, q <= 50") {
    const Real tol("1e-12");
    int failures = 0;
    for (int q = 1; q <= 50; ++q)
        for (int p = -50; p <= 50; ++p) {
            const Real x = Real(p) / Real(q);
            const auto got = exact::rational_reconstruct(x, q, tol);
            if (!got || *got != Rational(p, q)) ++failures;
        }
    CHECK(failures == 0);
}

TEST_CASE("nilpotency_index: examples") {
    CHECK(exact::nilpotency_index(RationalMatrix::identity(3)) == 0);
    CHECK(exact::nilpotency_index(RationalMatrix({{1, -1}, {0, 1}})) == 2);
    CHECK_FALSE(exact::nilpotency_index(RationalMatrix({{2, 0}, {0, 1}})).has_value());
}

TEST_CASE("nilpotency_index: invariant under conjugation") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int size = 1; size <= 5; ++size)
        for (int block = 1; block <= size; ++block) {
            // Unipotent Jordan block of length `block`, identity elsewhere.
            RationalMatrix j = RationalMatrix::identity(size);
            for (int i = 0; i + 1 < block; ++i) j(i, i + 1) = 1;
            const auto expected = exact::nilpotency_index(j);
            REQUIRE(expected.has_value());
            CHECK(*expected == (block == 1 ? 0 : block));
            for (int trial = 0; trial < 5; ++trial) {
                RationalMatrix p(size, size);
                std::optional<RationalMatrix> inverse;
                do {
                    for (int r = 0; r < size; ++r)
                        for (int c = 0; c < size; ++c) p(r, c) = entry(rng);
                    inverse = p.inverse();
                } while (!inverse);
                CHECK(exact::nilpotency_index(p * j * *inverse) == expected);
            }
        }
}

TEST_CASE("matrix: inverse and structure") {
    const RationalMatrix m({{2, 1}, {0, 3}});
    REQUIRE(m.inverse().has_value());
    CHECK(m * *m.inverse() == RationalMatrix::identity(2));
    CHECK(m.is_upper_triangular());
    CHECK_FALSE(RationalMatrix({{1, 2}, {2, 4}}).inverse().has_value());
}
