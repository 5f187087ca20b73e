#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kvisi/angle.hpp"
#include "kvisi/rational.hpp"

using kvisi::Angle;
using kvisi::Rational;

TEST_CASE("construction reduces to lowest terms with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).num() == 2);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);

    // A chain that would drift under floating point.
    Rational x(1, 10);
    Rational sum(0);
    for (int i = 0; i < 10; ++i) sum += x;
    CHECK(sum == Rational(1));
}

TEST_CASE("comparisons use cross multiplication") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 3) > Rational(2));
    CHECK(Rational(2, 6) <= Rational(1, 3));
    CHECK(Rational(1000000007, 1000000009) < Rational(1));
}

TEST_CASE("floor and ceil") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(4).floor() == 4);
    CHECK(Rational(4).ceil() == 4);
}

TEST_CASE("large intermediate products survive via 128-bit math") {
    Rational big(1'000'000'000LL, 999'999'937LL);
    Rational r = big * big / big / big;
    CHECK(r == Rational(1));
}

TEST_CASE("angle positions reduce into [0, 2)") {
    CHECK(kvisi::angle_mod(Rational(5, 2)) == Rational(1, 2));
    CHECK(kvisi::angle_mod(Rational(-1, 2)) == Rational(3, 2));
    CHECK(kvisi::angle_mod(Rational(2)) == Rational(0));
    CHECK(kvisi::angle_mod(Rational(4)) == Rational(0));
}

TEST_CASE("ccw gaps") {
    CHECK(kvisi::ccw_gap(Rational(3, 2), Rational(1, 2)) == Rational(1));
    CHECK(kvisi::ccw_gap(Rational(1, 2), Rational(3, 2)) == Rational(1));
    CHECK(kvisi::ccw_gap(Rational(0), Rational(0)) == Rational(0));
    CHECK(kvisi::ccw_gap(Rational(7, 4), Rational(1, 4)) == Rational(1, 2));
}
