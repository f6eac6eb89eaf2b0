#include "doctest.h"

#include "shadowbound/combinatorics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace shadowbound;

TEST_CASE("binom_real matches exact integers on integer arguments") {
    // Pascal triangle in 128-bit integers, compared after conversion to double
    // (binom_real promises correct rounding on the integer fast path).
    const int N = 60;
    std::vector<std::vector<unsigned __int128>> pas(N + 1);
    for (int n = 0; n <= N; ++n) {
        pas[n].assign(n + 1, 1);
        for (int k = 1; k < n; ++k) pas[n][k] = pas[n - 1][k - 1] + pas[n - 1][k];
    }
    for (int n = 0; n <= N; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(binom_real((double)n, k) == (double)pas[n][k]);
}

TEST_CASE("binom_real vanishes for integer t below k") {
    CHECK(binom_real(3.0, 5) == 0.0);
    CHECK(binom_real(0.0, 2) == 0.0);
    CHECK(binom_real(1.0, 2) == 0.0);
}

TEST_CASE("binom_real fractional values") {
    CHECK(binom_real(2.5, 2) == doctest::Approx(1.875));
    CHECK(binom_real(0.5, 2) == doctest::Approx(-0.125));
    CHECK(binom_real(6.5, 3) == doctest::Approx(6.5 * 5.5 * 4.5 / 6.0));
    CHECK(binom_real(10.25, 1) == doctest::Approx(10.25));
}

TEST_CASE("binom_real satisfies the Pascal recurrence at real arguments") {
    for (double t : {0.3, 1.7, 2.5, 10.25, 47.0, 99.9}) {
        for (int k = 2; k <= 6; ++k) {
            const double lhs = binom_real(t, k);
            const double rhs = binom_real(t - 1.0, k - 1) + binom_real(t - 1.0, k);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
        }
    }
}

TEST_CASE("binom_real rejects k < 1") {
    CHECK_THROWS_AS(binom_real(3.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(binom_real(3.0, -2), std::invalid_argument);
}

TEST_CASE("binom_ull exact values, symmetry, and overflow") {
    CHECK(binom_ull(0, 0) == 1ull);
    CHECK(binom_ull(10, 3) == 120ull);
    CHECK(binom_ull(10, 7) == 120ull);
    CHECK(binom_ull(5, 7) == 0ull);
    CHECK(binom_ull(60, 30) == 118264581564861424ull);
    CHECK_NOTHROW(binom_ull(67, 33));  // barely fits unsigned long long
    CHECK_THROWS_AS(binom_ull(68, 34), std::overflow_error);
    CHECK_THROWS_AS(binom_ull(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(binom_ull(5, -1), std::invalid_argument);
}

TEST_CASE("binom_inverse closed forms for k = 1 and k = 2") {
    CHECK(binom_inverse(7.5, 1) == doctest::Approx(7.5));
    CHECK(binom_inverse(3.0, 2) == doctest::Approx(3.0));
    CHECK(binom_inverse(0.0, 2) == doctest::Approx(1.0));
    // t(t-1)/2 = 11.25 has larger root (1 + sqrt(91)) / 2
    CHECK(binom_inverse(11.25, 2) == doctest::Approx(0.5 * (1.0 + std::sqrt(91.0))));
}

TEST_CASE("binom_inverse back-substitutes through binom_real") {
    for (int k = 2; k <= 5; ++k) {
        for (double m : {0.5, 1.0, 3.25, 10.0, 1234.5}) {
            const double t = binom_inverse(m, k);
            CHECK(binom_real(t, k) == doctest::Approx(m).epsilon(1e-9));
        }
    }
}

TEST_CASE("binom_inverse brackets non-integer solutions") {
    const double t = binom_inverse(5.0, 3);  // between C(4,3) = 4 and C(5,3) = 10
    CHECK(t > 4.0);
    CHECK(t < 5.0);
    CHECK(binom_real(t, 3) == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(binom_inverse(5.0, 3) < binom_inverse(6.0, 3));  // strictly increasing in m
}

TEST_CASE("binom_inverse hits integer anchors for k = 3") {
    CHECK(binom_inverse(10.0, 3) == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(binom_inverse(0.0, 3) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("binom_inverse rejects bad arguments") {
    CHECK_THROWS_AS(binom_inverse(-1.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(binom_inverse(5.0, 0), std::invalid_argument);
}
