#include "tropfw/errors.hpp"
#include "tropfw/rational.hpp"

#include "doctest.h"

#include <stdexcept>

using tropfw::ParseError;
using tropfw::Rational;
using tropfw::parse_rational;
using tropfw::round_to_decimal;
using tropfw::to_double;
using tropfw::to_fraction_string;

TEST_SUITE_BEGIN("rational");

TEST_CASE("parses integers with optional sign and whitespace") {
    CHECK(parse_rational("42") == 42);
    CHECK(parse_rational("-7") == -7);
    CHECK(parse_rational("+3") == 3);
    CHECK(parse_rational("  15 ") == 15);
    CHECK(parse_rational("0") == 0);
}

TEST_CASE("parses fractions and reduces them") {
    CHECK(parse_rational("355/113") == Rational(355, 113));
    CHECK(parse_rational("-2/6") == Rational(-1, 3));
    CHECK(parse_rational("4/-6") == Rational(-2, 3));
    CHECK(to_fraction_string(parse_rational("10/5")) == "2");
}

TEST_CASE("parses decimals and exponents exactly") {
    CHECK(parse_rational("3.25") == Rational(13, 4));
    CHECK(parse_rational("-0.0001") == Rational(-1, 10000));
    CHECK(parse_rational(".5") == Rational(1, 2));
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(parse_rational("2.5E2") == 250);
    CHECK(parse_rational("-1.5e1") == -15);
    CHECK(parse_rational("7.") == 7);
}

TEST_CASE("rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("   "), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
    CHECK_THROWS_AS(parse_rational("1e"), ParseError);
    CHECK_THROWS_AS(parse_rational("--5"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5/2"), ParseError);
}

TEST_CASE("round_to_decimal uses ties-to-even") {
    CHECK(round_to_decimal(0.125, 2) == Rational(12, 100));   // tie, 12 is even
    CHECK(round_to_decimal(0.375, 2) == Rational(38, 100));   // tie, up to even
    CHECK(round_to_decimal(2.5, 0) == 2);
    CHECK(round_to_decimal(3.5, 0) == 4);
    CHECK(round_to_decimal(-2.5, 0) == -2);
    CHECK(round_to_decimal(-3.5, 0) == -4);
}

TEST_CASE("round_to_decimal absorbs binary representation noise") {
    // 0.1 as a double is slightly above 1/10; twelve digits snap it back.
    CHECK(round_to_decimal(0.1, 12) == Rational(1, 10));
    CHECK(round_to_decimal(-0.3, 12) == Rational(-3, 10));
    CHECK(round_to_decimal(0.0, 12) == 0);
    CHECK(round_to_decimal(1234.0, 12) == 1234);
}

TEST_CASE("round_to_decimal validates its arguments") {
    CHECK_THROWS_AS(round_to_decimal(1.0 / 0.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(round_to_decimal(0.0 / 0.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(round_to_decimal(1.0, -1), std::invalid_argument);
}

TEST_CASE("fraction formatting round-trips") {
    CHECK(to_fraction_string(Rational(3, 2)) == "3/2");
    CHECK(to_fraction_string(Rational(5)) == "5");
    CHECK(to_fraction_string(Rational(-7, 3)) == "-7/3");
    CHECK(parse_rational(to_fraction_string(Rational(-22, 7))) == Rational(-22, 7));
}

TEST_CASE("to_double gives the nearest approximation") {
    CHECK(to_double(Rational(1, 2)) == 0.5);
    CHECK(to_double(Rational(-3)) == -3.0);
}

TEST_SUITE_END();
