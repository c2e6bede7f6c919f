#include "doctest.h"

#include "covering/rational.hpp"

#include <random>

using namespace covering;

TEST_SUITE("rational") {

TEST_CASE("parsing accepts integers, fractions and finite decimals") {
    CHECK(parse_rational("1") == Rational(1));
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("0.3") == Rational(3, 10));
    CHECK(parse_rational("12.50") == Rational(25, 2));
    CHECK(parse_rational("-1") == Rational(-1));
    CHECK(parse_rational("  7/21 ") == Rational(1, 3));
    CHECK(parse_rational("+4/6") == Rational(2, 3));
}

TEST_CASE("parsing rejects malformed literals") {
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(".5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("5."), std::invalid_argument);
}

TEST_CASE("to_string uses p/q with plain integers") {
    CHECK(to_string(Rational(1, 6)) == "1/6");
    CHECK(to_string(Rational(2)) == "2");
    CHECK(to_string(Rational(-3, 9)) == "-1/3");
}

TEST_CASE("values stay canonical through arithmetic") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 200; ++t) {
        const Rational a(static_cast<long>(rng() % 40) - 20, static_cast<long>(rng() % 9) + 1);
        const Rational b(static_cast<long>(rng() % 40) - 20, static_cast<long>(rng() % 9) + 1);
        for (const Rational& v : {Rational(a + b), Rational(a * b), Rational(a - b)}) {
            CHECK(denominator(v) > 0);
            CHECK(gcd(BigInt(abs(numerator(v))), denominator(v)) == 1);
        }
    }
}

TEST_CASE("floor and ceil") {
    CHECK(rational_floor(Rational(7, 2)) == 3);
    CHECK(rational_ceil(Rational(7, 2)) == 4);
    CHECK(rational_floor(Rational(-7, 2)) == -4);
    CHECK(rational_ceil(Rational(-7, 2)) == -3);
    CHECK(rational_floor(Rational(6)) == 6);
    CHECK(rational_ceil(Rational(6)) == 6);
}

TEST_CASE("rational_pow handles negative exponents") {
    CHECK(rational_pow(Rational(5, 4), 4) == Rational(625, 256));
    CHECK(rational_pow(Rational(5, 4), 0) == 1);
    CHECK(rational_pow(Rational(2), -3) == Rational(1, 8));
}

TEST_CASE("least_power_at_least") {
    CHECK(least_power_at_least(Rational(5, 4), Rational(4)) == 7);
    CHECK(least_power_at_least(Rational(5, 4), Rational(2)) == 4);
    CHECK(least_power_at_least(Rational(2), Rational(1)) == 0);
    CHECK(least_power_at_least(Rational(2), Rational(1, 3)) == -1);
    CHECK(least_power_at_least(Rational(2), Rational(1, 4)) == -2);
    CHECK(least_power_at_least(Rational(3, 2), Rational(13, 8)) == 2);
}

TEST_CASE("approx_sqrt stays below the root within 2^-20 relative error") {
    std::mt19937_64 rng(7);
    const Rational tol = Rational(1) + Rational(1, 1 << 20);
    for (int t = 0; t < 300; ++t) {
        const Rational x(static_cast<long>(rng() % 100000) + 1,
                         static_cast<long>(rng() % 1000) + 1);
        const Rational s = approx_sqrt(x);
        CHECK(s * s <= x);
        CHECK(x < s * s * tol * tol);
    }
    CHECK(approx_sqrt(Rational(0)) == 0);
}

}
