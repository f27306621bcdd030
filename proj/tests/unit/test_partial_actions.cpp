#include <doctest.h>

#include "fixtures.hpp"
#include "pglob/partial_action.hpp"

using namespace pglob;
using namespace pglob::testing;

namespace {

GlobalAction swap_on_k2() {
    return GlobalAction{FiniteGroup::cyclic(2), 2,
                        {Matrix::identity(2), mat({{0, 1}, {1, 0}})}};
}

}  // namespace

TEST_CASE("global actions validate and view as partial actions with full domains") {
    GlobalAction ga = swap_on_k2();
    CHECK(check_global_action(ga).overall());
    PartialAction pa = as_partial_action(ga);
    CHECK(check_partial_action(pa).overall());

    GlobalAction bad{FiniteGroup::cyclic(2), 2, {Matrix::identity(2), mat({{1, 1}, {0, 1}})}};
    CHECK_FALSE(check_global_action(bad).overall());  // shear has order > 2
}

TEST_CASE("identity domain must be the full space") {
    PartialAction pa = as_partial_action(swap_on_k2());
    pa.domains[0] = Subspace::span(2, {v({1, 0})});
    auto rep = check_partial_action(pa);
    CHECK_FALSE(rep.overall());
    CHECK_FALSE(rep.passed("identity_domain_full"));
}

TEST_CASE("restriction of the swap to span{e1}") {
    GlobalAction ga = swap_on_k2();
    Subspace s = Subspace::span(2, {v({1, 0})});
    PartialAction pa = restrict_global(ga, s, RestrictRequire::none);
    // In S-coordinates: X is 1-dimensional, X_1 = X, X_sigma = S ∩ swap(S) = 0.
    CHECK(pa.ambient_dim == 1);
    CHECK(pa.domains[0] == Subspace::full(1));
    CHECK(pa.domains[1].dim() == 0);
    CHECK(check_partial_action(pa).overall());
}

TEST_CASE("restriction to the full space is the global action itself") {
    GlobalAction ga = swap_on_k2();
    PartialAction pa = restrict_global(ga, Subspace::full(2), RestrictRequire::ideal,
                                       split_algebra(2));
    CHECK(pa.ambient_dim == 2);
    for (std::size_t g = 0; g < 2; ++g) {
        CHECK(pa.domains[g] == Subspace::full(2));
        CHECK(pa.maps[g] == ga.maps[g]);
    }
    CHECK(check_partial_action(pa).overall());
}

TEST_CASE("restriction to the zero subspace is the trivial partial action") {
    PartialAction pa = restrict_global(swap_on_k2(), Subspace::zero(2), RestrictRequire::none);
    CHECK(pa.ambient_dim == 0);
    CHECK(check_partial_action(pa).overall());
}

TEST_CASE("closure requirements are enforced") {
    // The diagonal is a subalgebra of K×K but not an ideal.
    Subspace diag = Subspace::span(2, {v({1, 1})});
    CHECK_THROWS_WITH_AS(
        restrict_global(swap_on_k2(), diag, RestrictRequire::ideal, split_algebra(2)),
        doctest::Contains("NotClosed"), MathError);
    CHECK_NOTHROW(
        restrict_global(swap_on_k2(), diag, RestrictRequire::subalgebra, split_algebra(2)));
}

TEST_CASE("restrictions of random global actions are always valid partial actions") {
    Rng rng(31);
    for (int t = 0; t < 6; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.small_int(2, 4));
        FiniteGroup g = FiniteGroup::cyclic(2);
        Matrix a = rng.invertible(n);
        auto ainv = invert(a);
        REQUIRE(ainv.has_value());
        // Order-2 action: conjugated coordinate involution.
        Matrix invo(n, n);
        for (std::size_t i = 0; i < n; ++i) invo(i, i) = i % 2 ? Rational(-1) : Rational(1);
        GlobalAction ga{g, n, {Matrix::identity(n), a * invo * *ainv}};
        REQUIRE(check_global_action(ga).overall());
        Subspace s = Subspace::span(n, {rng.vec(n), rng.vec(n)});
        PartialAction pa = restrict_global(ga, s, RestrictRequire::none);
        CHECK(check_partial_action(pa).overall());
    }
}

TEST_CASE("alpha_{g^-1} inverts alpha_g on the domains") {
    auto pa = induced_partial_action(z2_projection_rep());
    REQUIRE(check_partial_action(pa).overall());
    for (std::size_t g = 0; g < 2; ++g) {
        std::size_t gi = pa.group.inv(g);
        for (const auto& b : pa.domains[gi].basis())
            CHECK(pa.maps[gi].apply(pa.maps[g].apply(b)) == b);
    }
}

TEST_CASE("equivariant map checks") {
    PartialAction pa = as_partial_action(swap_on_k2());
    CHECK(check_equivariant(Matrix::identity(2), pa, pa));
    CHECK(check_equivariant(Matrix(2, 2), pa, pa));
    // A non-intertwining map fails.
    CHECK_FALSE(check_equivariant(mat({{1, 0}, {0, 0}}), pa, pa));
    CHECK_THROWS_AS(check_equivariant(Matrix(3, 3), pa, pa), InputError);
}
