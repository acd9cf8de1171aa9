#include <catch2/catch_amalgamated.hpp>

#include "stringart/rational.hpp"

using namespace stringart;

TEST_CASE("rationals are kept in canonical form") {
    // The two-argument constructor wants a positive denominator; signs
    // normalize into the numerator.
    const Rational r(-6, 4);
    CHECK(num(r) == -3);
    CHECK(den(r) == 2);
    CHECK(Rational(0, 7) == 0);
    CHECK(den(Rational(0, 7)) == 1);
}

TEST_CASE("to_string renders integers plainly and fractions as p/q") {
    CHECK(to_string(Rational(5)) == "5");
    CHECK(to_string(Rational(-5)) == "-5");
    CHECK(to_string(Rational(1, 2)) == "1/2");
    CHECK(to_string(Rational(-225, 2)) == "-225/2");
    CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("parse_rational accepts integers and fractions") {
    CHECK(parse_rational("42") == 42);
    CHECK(parse_rational("-42") == -42);
    CHECK(parse_rational("+7") == 7);
    CHECK(parse_rational("9/8") == Rational(9, 8));
    CHECK(parse_rational("-9/8") == Rational(-9, 8));
    CHECK(parse_rational("6/4") == Rational(3, 2));
}

TEST_CASE("parse_rational rejects decimals and malformed input") {
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
    CHECK_THROWS_AS(parse_rational("1e3"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("5/0"), Error);
    CHECK_THROWS_AS(parse_rational("5/-2"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational("1/2/3"), Error);
    CHECK_THROWS_AS(parse_rational(" 1"), Error);
}

TEST_CASE("parse_rational round-trips to_string") {
    for (int p = -12; p <= 12; ++p)
        for (int q = 1; q <= 9; ++q) {
            const Rational r(p, q);
            CHECK(parse_rational(to_string(r)) == r);
        }
}
