#include <doctest.h>

#include "p2galois/rational.hpp"

using p2g::Rational;

TEST_CASE("rationals are canonical on construction") {
    Rational q(2, 4);
    CHECK(q.numerator() == 1);
    CHECK(q.denominator() == 2);

    Rational negative(3, -6);
    CHECK(negative.numerator() == -1);
    CHECK(negative.denominator() == 2);

    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic") {
    Rational half(1, 2), third(1, 3);
    CHECK(half + third == Rational(5, 6));
    CHECK(half - third == Rational(1, 6));
    CHECK(half * third == Rational(1, 6));
    CHECK(half / third == Rational(3, 2));
    CHECK(-half == Rational(-1, 2));
    CHECK(half.reciprocal() == Rational(2));
    CHECK_THROWS_AS(half / Rational(0), std::domain_error);
    CHECK(Rational(7, 3) > Rational(2));
}

TEST_CASE("string rendering and parsing") {
    CHECK(Rational(-8).str() == "-8");
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational::from_string("-8") == Rational(-8));
    CHECK(Rational::from_string("3/9") == Rational(1, 3));
    CHECK_THROWS_AS(Rational::from_string("abc"), std::domain_error);
}

TEST_CASE("rational square roots") {
    CHECK(*p2g::rational_sqrt(Rational(25)) == Rational(5));
    CHECK(*p2g::rational_sqrt(Rational(4, 9)) == Rational(2, 3));
    CHECK(*p2g::rational_sqrt(Rational(0)) == Rational(0));
    CHECK(!p2g::rational_sqrt(Rational(2)).has_value());
    CHECK(!p2g::rational_sqrt(Rational(-4)).has_value());
    CHECK(!p2g::rational_sqrt(Rational(5, 4)).has_value());
}
