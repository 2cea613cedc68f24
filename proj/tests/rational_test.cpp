#include <doctest.h>

#include <stdexcept>

#include "combprob/rational.hpp"

using combprob::rational;

TEST_CASE("construction normalizes to lowest terms with positive denominator") {
    CHECK(rational(2, 4) == rational(1, 2));
    CHECK(rational(-2, 4) == rational(-1, 2));
    CHECK(rational(2, -4) == rational(-1, 2));
    CHECK(rational(-2, -4) == rational(1, 2));
    CHECK(rational(0, 7) == rational(0));
    CHECK(rational(0, 7).den() == 1);
    CHECK(rational(6, 3).num() == 2);
    CHECK(rational(6, 3).den() == 1);
    CHECK_THROWS_AS(rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
    CHECK(rational(1, 3) + rational(1, 6) == rational(1, 2));
    CHECK(rational(1, 2) - rational(1, 2) == rational(0));
    CHECK(rational(1, 3) * rational(3, 5) == rational(1, 5));
    CHECK(rational(1, 3) / rational(2, 3) == rational(1, 2));
    CHECK(-rational(1, 5) == rational(-1, 5));
    CHECK(rational(-1, 5).abs() == rational(1, 5));
    CHECK(rational(-1, 5).sign() == -1);
    CHECK(rational(0).sign() == 0);
    CHECK(rational(2, 5).sign() == 1);
    rational acc;
    for (int i = 0; i < 5; ++i) acc += rational(1, 5);
    CHECK(acc == rational(1));
    CHECK_THROWS_AS(rational(1) / rational(0), std::domain_error);
}

TEST_CASE("ordering is exact") {
    CHECK(rational(1, 3) < rational(2, 5));
    CHECK(rational(-1, 2) < rational(-1, 3));
    CHECK(rational(1, 3) <= rational(1, 3));
    CHECK(rational(2, 5) > rational(1, 3));
    CHECK(rational(1, 3) != rational(1, 4));
    // 1/3 vs 0.333...: no floating point anywhere.
    CHECK(rational(1, 3) > rational(333333333, 1000000000));
}

TEST_CASE("parse accepts integers and fractions only") {
    CHECK(rational::parse("3") == rational(3));
    CHECK(rational::parse("-3") == rational(-3));
    CHECK(rational::parse("3/4") == rational(3, 4));
    CHECK(rational::parse("-3/4") == rational(-3, 4));
    CHECK(rational::parse("0") == rational(0));
    CHECK(rational::parse("2/4") == rational(1, 2));
    CHECK_FALSE(rational::parse("").has_value());
    CHECK_FALSE(rational::parse("1/0").has_value());
    CHECK_FALSE(rational::parse("1/-2").has_value());
    CHECK_FALSE(rational::parse("+1").has_value());
    CHECK_FALSE(rational::parse("a").has_value());
    CHECK_FALSE(rational::parse("1.5").has_value());
    CHECK_FALSE(rational::parse("1 / 2").has_value());
    CHECK_FALSE(rational::parse("99999999999999999999").has_value());
}

TEST_CASE("str renders exactly and round-trips") {
    CHECK(rational(1, 2).str() == "1/2");
    CHECK(rational(-1, 2).str() == "-1/2");
    CHECK(rational(3).str() == "3");
    CHECK(rational(0).str() == "0");
    for (int num = -8; num <= 8; ++num)
        for (int den = 1; den <= 8; ++den) {
            rational r(num, den);
            CHECK(rational::parse(r.str()) == r);
        }
}

TEST_CASE("overflow throws instead of wrapping") {
    rational big(1, 3000000000LL);
    CHECK_THROWS_AS(big * rational(1, 4000000000LL), std::overflow_error);
}
