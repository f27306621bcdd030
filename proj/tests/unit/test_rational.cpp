#include <doctest.h>

#include "helpers.hpp"
#include "pglob/rational.hpp"

using namespace pglob;
using namespace pglob::testing;

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK((Rational(7) / Rational(7)).is_one());
    CHECK(Rational(0).is_zero());
    CHECK((Rational(1, 3) * Rational(3)).str() == "1");
    // No rounding on a chain that would break floating point.
    Rational x(1, 10);
    Rational sum;
    for (int i = 0; i < 10; ++i) sum += x;
    CHECK(sum.is_one());
}

TEST_CASE("rational parsing and printing round-trip") {
    CHECK(Rational::parse("3/4").str() == "3/4");
    CHECK(Rational::parse("-3/4").str() == "-3/4");
    CHECK(Rational::parse("8/4").str() == "2");
    CHECK(Rational::parse("0/7").str() == "0");
    CHECK(Rational::parse("12").str() == "12");
    CHECK(Rational::parse("123456789012345678901234567890/2").str() ==
          "61728394506172839450617283945");
    CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), InputError);
    CHECK_THROWS_AS(Rational::parse("a"), InputError);
    CHECK_THROWS_AS(Rational::parse(""), InputError);
}

TEST_CASE("big values stay exact") {
    // (10^30 + 1) - 10^30 = 1 exactly.
    Rational big = Rational::parse("1000000000000000000000000000000");
    CHECK((big + Rational(1) - big).is_one());
}
