#include <doctest.h>

#include "helpers.hpp"
#include "pglob/linalg.hpp"

using namespace pglob;
using namespace pglob::testing;

TEST_CASE("rref: zero, identity, and the hand-reduced 2x2") {
    auto z = rref(Matrix(2, 2));
    CHECK(z.mat == Matrix(2, 2));
    CHECK(z.pivot_cols.empty());

    auto id = rref(Matrix::identity(3));
    CHECK(id.mat == Matrix::identity(3));
    CHECK(id.pivot_cols == std::vector<std::size_t>{0, 1, 2});

    // [[2,4],[1,2]] row-reduces by hand to [[1,2],[0,0]] with pivot column 0.
    auto r = rref(mat({{2, 4}, {1, 2}}));
    CHECK(r.mat == mat({{1, 2}, {0, 0}}));
    CHECK(r.pivot_cols == std::vector<std::size_t>{0});
}

TEST_CASE("rref is idempotent") {
    Rng rng(42);
    for (int t = 0; t < 20; ++t) {
        Matrix m = rng.matrix(rng.small_int(1, 6), rng.small_int(1, 6));
        auto once = rref(m);
        auto twice = rref(once.mat);
        CHECK(once.mat == twice.mat);
        CHECK(once.pivot_cols == twice.pivot_cols);
    }
}

TEST_CASE("kernel: identity, zero, and the 1x2 solve") {
    CHECK(kernel(Matrix::identity(4)).dim() == 0);
    CHECK(kernel(Matrix(2, 3)).dim() == 3);
    // {v : v0 + v1 = 0} = span{(1, -1)}.
    Subspace k = kernel(mat({{1, 1}}));
    CHECK(k.dim() == 1);
    CHECK(k.contains(v({1, -1})));
    CHECK_FALSE(k.contains(v({1, 1})));
}

TEST_CASE("kernel vectors are actual solutions") {
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        Matrix m = rng.matrix(rng.small_int(1, 6), rng.small_int(1, 6));
        Subspace k = kernel(m);
        for (const auto& b : k.basis()) CHECK(vec_is_zero(m.apply(b)));
    }
}

TEST_CASE("image and subspace arithmetic") {
    // Column space of a single column (1,2).
    Subspace im = image(mat({{1}, {2}}));
    CHECK(im.dim() == 1);
    CHECK(im.contains(v({1, 2})));
    CHECK(im.contains(v({2, 4})));
    CHECK_FALSE(im.contains(v({1, 0})));

    Subspace e1 = Subspace::span(2, {v({1, 0})});
    Subspace e2 = Subspace::span(2, {v({0, 1})});
    Subspace diag = Subspace::span(2, {v({1, 1})});
    CHECK(subspace_intersect(e1, e2).dim() == 0);
    CHECK(subspace_sum(e1, diag) == Subspace::full(2));
    CHECK(subspace_intersect(subspace_sum(e1, e2), diag) == diag);
    CHECK_THROWS_AS(subspace_sum(e1, Subspace::zero(3)), InputError);
}

TEST_CASE("canonical RREF basis makes subspace equality structural") {
    Subspace a = Subspace::span(3, {v({1, 1, 0}), v({0, 0, 1})});
    Subspace b = Subspace::span(3, {v({2, 2, 2}), v({0, 0, -5}), v({1, 1, 3})});
    CHECK(a == b);
}

TEST_CASE("rank-nullity on random matrices up to 8x8") {
    Rng rng(2024);
    for (int t = 0; t < 30; ++t) {
        std::size_t rows = static_cast<std::size_t>(rng.small_int(1, 8));
        std::size_t cols = static_cast<std::size_t>(rng.small_int(1, 8));
        Matrix m = rng.matrix(rows, cols);
        CHECK(kernel(m).dim() + image(m).dim() == cols);
    }
}

TEST_CASE("quotients: trivial, one relation, full relations") {
    QuotientSpace q0 = make_quotient(2, {});
    CHECK(q0.dim() == 2);
    CHECK(q0.project() == Matrix::identity(2));

    QuotientSpace q1 = make_quotient(2, {v({1, -1})});
    CHECK(q1.dim() == 1);
    CHECK(q1.project_vec(v({1, 0})) == q1.project_vec(v({0, 1})));
    CHECK(vec_is_zero(q1.project_vec(v({1, -1}))));

    QuotientSpace q2 = make_quotient(3, {v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})});
    CHECK(q2.dim() == 0);
}

TEST_CASE("quotient projection kills exactly the relations") {
    Rng rng(11);
    for (int t = 0; t < 15; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.small_int(1, 6));
        std::vector<Vec> rels;
        for (int k = rng.small_int(0, 4); k > 0; --k) rels.push_back(rng.vec(n));
        QuotientSpace qs = make_quotient(n, rels);
        CHECK(qs.dim() == n - qs.relations().dim());
        for (const auto& r : rels) CHECK(vec_is_zero(qs.project_vec(r)));
        CHECK(qs.project() * qs.lift() == Matrix::identity(qs.dim()));
        // Free coordinates ascend.
        for (std::size_t i = 1; i < qs.free_coords().size(); ++i)
            CHECK(qs.free_coords()[i - 1] < qs.free_coords()[i]);
    }
}

TEST_CASE("quotient universal property, constructively") {
    // Any map killing the relations factors through the projection.
    Rng rng(5);
    for (int t = 0; t < 10; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.small_int(2, 6));
        std::vector<Vec> rels = {rng.vec(n)};
        QuotientSpace qs = make_quotient(n, rels);
        // Build f as g0∘project for a random g0; then f kills relations and
        // try_lower must recover a g with g∘project = f.
        Matrix g0 = rng.matrix(3, qs.dim());
        Matrix f = g0 * qs.project();
        auto g = qs.try_lower(f);
        REQUIRE(g.has_value());
        CHECK(*g * qs.project() == f);
        CHECK(*g == g0);
    }
    // And a map NOT killing the relations is rejected.
    QuotientSpace qs = make_quotient(2, {v({1, -1})});
    CHECK_FALSE(qs.try_lower(Matrix::identity(2)).has_value());
}

TEST_CASE("solve and invert") {
    Matrix a = mat({{1, 2}, {3, 4}});
    auto inv = invert(a);
    REQUIRE(inv.has_value());
    CHECK(*inv * a == Matrix::identity(2));
    CHECK_FALSE(invert(mat({{1, 2}, {2, 4}})).has_value());

    auto x = solve(mat({{1, 1}, {1, -1}}), v({3, 1}));
    REQUIRE(x.has_value());
    CHECK(*x == v({2, 1}));
    CHECK_FALSE(solve(mat({{1, 1}, {2, 2}}), v({1, 3})).has_value());
}

TEST_CASE("linear system solver reports uniqueness correctly") {
    LinearSystem s(2);
    s.add_equation(v({1, 1}), q(3));
    s.add_equation(v({1, -1}), q(1));
    auto sol = s.solve();
    REQUIRE(sol.particular.has_value());
    CHECK(sol.unique());
    CHECK(*sol.particular == v({2, 1}));

    LinearSystem under(2);
    under.add_equation(v({1, 1}), q(3));
    auto sol2 = under.solve();
    CHECK(sol2.particular.has_value());
    CHECK(sol2.kernel_basis.size() == 1);
    CHECK_FALSE(sol2.unique());
}

TEST_CASE("subspace coordinates restrict invariant maps") {
    Subspace s = Subspace::span(3, {v({1, 0, 1}), v({0, 1, 0})});
    auto c = coords_of(s);
    CHECK(c.sel * c.incl == Matrix::identity(2));
    // A map preserving s restricts; one moving it out throws.
    Matrix keep = mat({{1, 0, 0}, {0, 2, 0}, {1, 0, 0}});  // e1+e3 -> e1+e3, e2 -> 2e2
    Matrix r = restrict_to(keep, c);
    CHECK(r == mat({{1, 0}, {0, 2}}));
    Matrix move = mat({{0, 0, 0}, {0, 0, 0}, {1, 0, 0}});
    CHECK_THROWS_AS(restrict_to(move, c), MathError);
}
