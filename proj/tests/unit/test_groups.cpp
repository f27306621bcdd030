#include <doctest.h>

#include "helpers.hpp"
#include "pglob/group.hpp"

using namespace pglob;
using namespace pglob::testing;

TEST_CASE("Z/2 validates with identity 0 and self-inverse generator") {
    FiniteGroup g = FiniteGroup::validate({{0, 1}, {1, 0}});
    CHECK(g.order() == 2);
    CHECK(g.identity() == 0);
    CHECK(g.inv(0) == 0);
    CHECK(g.inv(1) == 1);
    CHECK(g.mul(1, 1) == 0);
}

TEST_CASE("Z/3 inverse table found by brute force") {
    FiniteGroup g = FiniteGroup::cyclic(3);
    CHECK(g.inv(0) == 0);
    CHECK(g.inv(1) == 2);
    CHECK(g.inv(2) == 1);
}

TEST_CASE("Z/4 inverse of the generator") {
    CHECK(FiniteGroup::cyclic(4).inv(1) == 3);
}

TEST_CASE("invalid tables name a witness") {
    // The meet-semilattice table is associative with identity but 1 has no
    // inverse.
    CHECK_THROWS_WITH_AS(FiniteGroup::validate({{0, 1}, {1, 1}}),
                         doctest::Contains("NoInverse"), MathError);
    // An order-3 table that is a quasigroup but not associative.
    CHECK_THROWS_WITH_AS(FiniteGroup::validate({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}),
                         doctest::Contains("NotAssociative"), MathError);
    // Left-zero semigroup: no identity at all.
    CHECK_THROWS_WITH_AS(FiniteGroup::validate({{0, 0}, {1, 1}}),
                         doctest::Contains("NoIdentity"), MathError);
    CHECK_THROWS_AS(FiniteGroup::validate({{0, 1}, {1, 0}}, 1), MathError);
    CHECK_THROWS_AS(FiniteGroup::validate({{0, 2}, {1, 0}}), InputError);
    CHECK_THROWS_AS(FiniteGroup::validate({{0, 1}}), InputError);
}

TEST_CASE("S3 is a valid nonabelian group where transpositions are involutions") {
    FiniteGroup s3 = FiniteGroup::symmetric3();
    CHECK(s3.order() == 6);
    bool abelian = true;
    for (std::size_t g = 0; g < 6; ++g)
        for (std::size_t h = 0; h < 6; ++h)
            if (s3.mul(g, h) != s3.mul(h, g)) abelian = false;
    CHECK_FALSE(abelian);
    // Index 1 = permutation (0)(12), a transposition.
    CHECK(s3.mul(1, 1) == 0);
    CHECK(s3.inv(1) == 1);
}

TEST_CASE("group properties: inverses involutive, Latin square") {
    for (auto g : {FiniteGroup::cyclic(1), FiniteGroup::cyclic(5), FiniteGroup::symmetric3()}) {
        const std::size_t n = g.order();
        for (std::size_t a = 0; a < n; ++a) {
            CHECK(g.inv(g.inv(a)) == a);
            CHECK(g.mul(a, g.inv(a)) == g.identity());
            // Row and column a are permutations.
            std::vector<bool> row(n), col(n);
            for (std::size_t b = 0; b < n; ++b) {
                row[g.mul(a, b)] = true;
                col[g.mul(b, a)] = true;
            }
            for (std::size_t b = 0; b < n; ++b) {
                CHECK(row[b]);
                CHECK(col[b]);
            }
        }
    }
}
