#include <doctest.h>

#include "sumfree/rational.hpp"

using namespace sumfree;

TEST_CASE("rational arithmetic and normalization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 3) - Rational(1, 3)) == Rational(0));
    CHECK((Rational(2, 3) * Rational(3, 4)) == Rational(1, 2));
    CHECK((Rational(1, 2) / Rational(1, 4)) == Rational(2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(3).str() == "3");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational comparison against tiny powers of ten") {
    CHECK(Rational(0).less_than_pow10(1, 23));
    CHECK(!Rational(1, 49).less_than_pow10(1, 23));
    CHECK(Rational(1, 49).less_than_pow10(1, 1));
}

TEST_CASE("dyadic canonical form and arithmetic") {
    CHECK(Dyadic(4, 2) == Dyadic(1));        // 4/4 = 1
    CHECK(Dyadic(6, 1) == Dyadic(3));        // 6/2 = 3
    CHECK(Dyadic(15, 1).str() == "15/2^1");
    CHECK((Dyadic(1, 1) + Dyadic(1, 1)) == Dyadic(1));
    CHECK((Dyadic(7, 3) + Dyadic(1, 3)) == Dyadic(1));
    CHECK((Dyadic(3, 1) * Dyadic(5, 2)) == Dyadic(15, 3));
    CHECK(Dyadic(15, 1).times_pow2(14).as_integer() == 122880);
    CHECK(Dyadic(15, 1).times_pow2(-2) == Dyadic(15, 3));
    CHECK(Dyadic(0, 5) == Dyadic(0));
    CHECK(Dyadic(1, 2) < Dyadic(1, 1));
    CHECK_THROWS_AS(Dyadic(3, 1).as_integer(), std::domain_error);
    CHECK_THROWS_AS(Dyadic(1).times_pow2(63), std::overflow_error);
}
