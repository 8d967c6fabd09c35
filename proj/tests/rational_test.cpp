#include "doctest.h"

#include "retrieval/errors.hpp"
#include "retrieval/rational.hpp"

using namespace retrieval;

TEST_CASE("binomial basics and edge cases") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(28, 14) == BigInt("40116600"));
    // symmetry and Pascal identity on a larger value
    CHECK(binomial(40, 17) == binomial(40, 23));
    CHECK(binomial(40, 17) == binomial(39, 16) + binomial(39, 17));
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0) == 0);
    CHECK(harmonic(1) == 1);
    CHECK(harmonic(4) == Rational(25, 12));
    CHECK(harmonic(8) == Rational(761, 280));
}

TEST_CASE("fraction strings round trip") {
    CHECK(to_fraction_string(Rational(106, 21)) == "106/21");
    CHECK(to_fraction_string(Rational(4)) == "4");
    CHECK(to_fraction_string(Rational(-3, 7)) == "-3/7");
    CHECK(from_fraction_string("403/105") == Rational(403, 105));
    CHECK(from_fraction_string("12") == Rational(12));
    CHECK_THROWS_AS(from_fraction_string("1/0"), ParseError);
    CHECK_THROWS_AS(from_fraction_string("abc"), ParseError);
}

TEST_CASE("decimal rendering") {
    CHECK(to_decimal_string(Rational(1, 4), 3) == "0.25");
    CHECK(to_decimal_string(Rational(106, 21), 6) == "5.04762");
    CHECK(to_decimal_string(Rational(0)) == "0");
    // round-half-even at the cut digit
    CHECK(to_decimal_string(Rational(25, 2), 2) == "12");
    CHECK(to_decimal_string(Rational(35, 2), 2) == "18");
    CHECK(to_double(Rational(1, 2)) == doctest::Approx(0.5));
}
