#include <catch2/catch_amalgamated.hpp>

#include "lidstone/rational.hpp"

using namespace lidstone;

TEST_CASE("rationals normalize to lowest terms") {
    Rational q(6, 8);
    CHECK(numerator(q) == 3);
    CHECK(denominator(q) == 4);
    CHECK(to_string(Rational(-4, 2)) == "-2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(to_string(Rational(3, 4)) == "3/4");
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("17") == Rational(17));
    CHECK(parse_rational("-0") == Rational(0));
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);

    // Round trip on assorted values.
    for (int num = -20; num <= 20; ++num)
        for (int den = 1; den <= 7; ++den) {
            Rational q(num, den);
            CHECK(parse_rational(to_string(q)) == q);
        }
}

TEST_CASE("factorials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(3, 5) == 0);
    CHECK(falling_factorial(4, 0) == 1);
}

TEST_CASE("rational powers") {
    CHECK(pow_rational(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow_rational(Rational(2), -2) == Rational(1, 4));
    CHECK(pow_rational(Rational(5), 0) == Rational(1));
    CHECK_THROWS_AS(pow_rational(Rational(0), -1), std::domain_error);
}
