#include <doctest.h>

#include "fixtures.hpp"
#include "pglob/lambda.hpp"

using namespace pglob;
using namespace pglob::testing;

TEST_CASE("Z/2 zero rep on K: dim 2, swap action, block-1 embedding") {
    LambdaSpace ls = build_lambda(z2_zero_rep());
    CHECK(ls.dim() == 2);
    CHECK(ls.quotient().relations().dim() == 0);
    CHECK(ls.theta(0) == Matrix::identity(2));
    CHECK(ls.theta(1) == mat({{0, 1}, {1, 0}}));
    CHECK(ls.iota() == mat({{1}, {0}}));
    CHECK(ls.tau() == mat({{1, 0}}));
    // The product makes Lambda(K) the split algebra K×K.
    REQUIRE(ls.has_product());
    CHECK(ls.product_algebra().structure_constants() ==
          split_algebra(2).structure_constants());
}

TEST_CASE("Z/2 global rep on K: one relation collapses Lambda to K") {
    LambdaSpace ls = build_lambda(z2_global_rep());
    CHECK(ls.dim() == 1);
    CHECK(ls.quotient().relations().dim() == 1);
    CHECK(ls.theta(1) == Matrix::identity(1));
    CHECK(ls.class_of(0, v({1})) == ls.class_of(1, v({1})));
}

TEST_CASE("trivial group: Lambda(M) is M") {
    PartialRep triv;
    triv.group = FiniteGroup::cyclic(1);
    triv.dim = 3;
    triv.pi = {Matrix::identity(3)};
    LambdaSpace ls = build_lambda(triv);
    CHECK(ls.dim() == 3);
    CHECK(ls.theta(0) == Matrix::identity(3));
    CHECK(ls.iota() == Matrix::identity(3));
    CHECK(ls.tau() == Matrix::identity(3));
}

TEST_CASE("class_of semantics") {
    LambdaSpace ls = build_lambda(z2_projection_rep());
    CHECK(ls.dim() == 3);
    // class_of(1, m) = iota(m).
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(ls.class_of(0, vec_unit(2, i)) == ls.iota().apply(vec_unit(2, i)));
    // class_of(g, 0) = 0.
    CHECK(vec_is_zero(ls.class_of(1, v({0, 0}))));
    // Theta_h(class(g, m)) = class(hg, m).
    Rng rng(3);
    for (int t = 0; t < 8; ++t) {
        Vec m = rng.vec(2);
        for (std::size_t g = 0; g < 2; ++g)
            for (std::size_t h = 0; h < 2; ++h)
                CHECK(ls.theta(h).apply(ls.class_of(g, m)) ==
                      ls.class_of(ls.group().mul(h, g), m));
    }
    // e1 generates the sigma-domain, so ⌊1, e1⌋ = ⌊σ, e1⌋ after the relation.
    CHECK(ls.class_of(0, v({1, 0})) == ls.class_of(1, v({1, 0})));
    CHECK(ls.class_of(0, v({0, 1})) != ls.class_of(1, v({0, 1})));
}

TEST_CASE("dim Lambda = |G|·d − rank(relations) across the corpus") {
    for (const auto& rep : {z2_zero_rep(), z2_global_rep(), z2_projection_rep(), z4_rep(),
                            s3_zero_rep(), s3_sign_rep(), z2_lie_rep()}) {
        LambdaSpace ls = build_lambda(rep);
        CHECK(ls.dim() == rep.group.order() * rep.dim - ls.quotient().relations().dim());
    }
}

TEST_CASE("product on generating classes") {
    LambdaSpace ls = build_lambda(z2_zero_rep());
    Vec one_e = ls.class_of(0, v({1}));
    Vec g_e = ls.class_of(1, v({1}));
    // ⌊1, e⌋·⌊g, e⌋ = ⌊1, e·π_g(e)⌋ = 0 because π_g = 0.
    CHECK(vec_is_zero(ls.product(one_e, g_e)));
    CHECK(ls.product(one_e, one_e) == one_e);
    CHECK(ls.product(g_e, g_e) == g_e);
    CHECK(vec_is_zero(ls.product(g_e, vec_zero(2))));
}

TEST_CASE("iota is an algebra homomorphism into the product") {
    for (const auto& rep : {z2_zero_rep(), z2_projection_rep(), z4_rep(), z2_lie_rep()}) {
        LambdaSpace ls = build_lambda(rep);
        const Algebra& a = *rep.algebra;
        const Algebra& la = ls.product_algebra();
        for (std::size_t i = 0; i < rep.dim; ++i)
            for (std::size_t j = 0; j < rep.dim; ++j) {
                Vec lhs = ls.iota().apply(a.basis_product(i, j));
                Vec rhs = la.multiply(ls.iota().apply(vec_unit(rep.dim, i)),
                                      ls.iota().apply(vec_unit(rep.dim, j)));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("product well-definedness: both formulas, single-valuedness") {
    for (const auto& rep : {z2_zero_rep(), z2_projection_rep(), z4_rep(), s3_sign_rep(),
                            z2_lie_rep()}) {
        auto wd = check_product_well_defined(build_lambda(rep));
        CHECK(wd.overall());
    }
}

TEST_CASE("representative independence of the product across equal classes") {
    // For the projection rep, ⌊1, e1⌋ = ⌊σ, e1⌋ is forced by a relation;
    // products of the two representatives with every generator coincide.
    LambdaSpace ls = build_lambda(z2_projection_rep());
    Vec a = ls.class_of(0, v({1, 0}));
    Vec b = ls.class_of(1, v({1, 0}));
    REQUIRE(a == b);
    for (std::size_t g = 0; g < 2; ++g)
        for (std::size_t i = 0; i < 2; ++i) {
            Vec other = ls.class_of(g, vec_unit(2, i));
            CHECK(ls.product(a, other) == ls.product(b, other));
            CHECK(ls.product(other, a) == ls.product(other, b));
        }
}

TEST_CASE("Theta acts by algebra automorphisms of the product") {
    LambdaSpace ls = build_lambda(z4_rep());
    const Algebra& la = ls.product_algebra();
    for (std::size_t g = 0; g < 4; ++g)
        for (std::size_t u = 0; u < ls.dim(); ++u)
            for (std::size_t w = 0; w < ls.dim(); ++w) {
                Vec lhs = ls.theta(g).apply(la.basis_product(u, w));
                Vec rhs = la.multiply(ls.theta(g).col(u), ls.theta(g).col(w));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("tau intertwines Theta with the partial rep") {
    for (const auto& rep : {z2_projection_rep(), z4_rep()}) {
        LambdaSpace ls = build_lambda(rep);
        for (std::size_t g = 0; g < rep.group.order(); ++g)
            CHECK(ls.tau() * ls.theta(g) * ls.iota() == rep.pi[g]);
    }
}

TEST_CASE("variety membership: associative and Lie cases") {
    for (const auto& rep : {z2_zero_rep(), z2_projection_rep(), z4_rep(), s3_zero_rep()}) {
        auto report = check_variety(build_lambda(rep), associative_identities());
        CHECK(report.overall());
    }
    auto lie_report = check_variety(build_lambda(z2_lie_rep()), lie_identities());
    CHECK(lie_report.overall());
    // Empty identity set: vacuous pass.
    CHECK(check_variety(build_lambda(z2_zero_rep()), {}).overall());
}

TEST_CASE("variety hypothesis failure is a hard error") {
    Polynomial disjoint({{q(1), Monomial::parse("(x1 x2)")}, {q(1), Monomial::parse("(x3 x4)")}},
                        4);
    CHECK_THROWS_WITH_AS(check_variety(build_lambda(z2_zero_rep()), {disjoint}),
                         doctest::Contains("HypothesisFailed"), MathError);
}

TEST_CASE("globalization conditions hold on the corpus") {
    for (const auto& rep : {z2_zero_rep(), z2_global_rep(), z2_projection_rep(), z4_rep(),
                            s3_zero_rep(), s3_sign_rep(), z2_lie_rep()}) {
        auto report = check_globalization(build_lambda(rep));
        CHECK(report.overall());
    }
}

TEST_CASE("module-level Lambda refuses the product when images are not ideals") {
    PartialRep r;
    r.group = FiniteGroup::cyclic(2);
    r.dim = 2;
    r.pi = {Matrix::identity(2), mat({{1, 0}, {1, 0}})};  // image = diagonal, not an ideal
    r.target_kind = TargetKind::algebra;
    r.algebra = split_algebra(2);
    REQUIRE(check_partial_rep(r).overall());
    LambdaSpace ls = build_lambda(r);
    CHECK_FALSE(ls.has_product());
    CHECK_THROWS_WITH_AS(ls.product_algebra(), doctest::Contains("NotIdeal"), MathError);
    CHECK(ls.dim() == 4 - ls.quotient().relations().dim());
}

TEST_CASE("comparison with Lambda itself gives the identity") {
    LambdaSpace ls = build_lambda(z2_zero_rep());
    GlobalizationCandidate self{GlobalAction{ls.group(), ls.dim(), {ls.theta(0), ls.theta(1)}},
                                ls.product_algebra(), ls.iota()};
    auto cmp = compare_globalization(ls, self);
    CHECK(cmp.checks.overall());
    CHECK(cmp.phi == Matrix::identity(2));
}

TEST_CASE("comparison with the hand-built K×K globalization is an isomorphism") {
    LambdaSpace ls = build_lambda(z2_zero_rep());
    GlobalizationCandidate other{
        GlobalAction{FiniteGroup::cyclic(2), 2, {Matrix::identity(2), mat({{0, 1}, {1, 0}})}},
        split_algebra(2), mat({{1}, {0}})};
    auto cmp = compare_globalization(ls, other);
    CHECK(cmp.checks.overall());
    auto inv = invert(cmp.phi);
    CHECK(inv.has_value());
}

TEST_CASE("iota is equivariant from the induced partial action into Theta") {
    for (const auto& rep : {z2_zero_rep(), z2_projection_rep(), z4_rep()}) {
        LambdaSpace ls = build_lambda(rep);
        PartialAction src = induced_partial_action(rep);
        std::vector<Matrix> thetas;
        for (std::size_t g = 0; g < rep.group.order(); ++g) thetas.push_back(ls.theta(g));
        PartialAction dst = as_partial_action(GlobalAction{rep.group, ls.dim(), thetas});
        CHECK(check_equivariant(ls.iota(), src, dst));
    }
}

TEST_CASE("comparison with Theta twisted by an automorphism recovers the twist") {
    LambdaSpace ls = build_lambda(z2_zero_rep());
    // Conjugating by the swap automorphism of K×K gives another globalization
    // of the same partial action; phi must be exactly the twist.
    Matrix u = mat({{0, 1}, {1, 0}});
    std::vector<Matrix> twisted;
    for (std::size_t g = 0; g < 2; ++g) twisted.push_back(u * ls.theta(g) * u);
    GlobalizationCandidate other{GlobalAction{ls.group(), 2, twisted}, ls.product_algebra(),
                                 u * ls.iota()};
    auto cmp = compare_globalization(ls, other);
    CHECK(cmp.checks.overall());
    CHECK(cmp.phi == u);
}

TEST_CASE("comparison prerequisites are enforced") {
    LambdaSpace ls = build_lambda(z2_zero_rep());
    // The trivial action on K×K does not restrict to the zero partial action.
    GlobalizationCandidate bad{
        GlobalAction{FiniteGroup::cyclic(2), 2, {Matrix::identity(2), Matrix::identity(2)}},
        split_algebra(2), mat({{1}, {0}})};
    CHECK_THROWS_WITH_AS(compare_globalization(ls, bad), doctest::Contains("PrerequisiteFailed"),
                         MathError);
}

TEST_CASE("universal factorization through Lambda") {
    LambdaSpace ls = build_lambda(z2_zero_rep());

    GlobalAction swap{FiniteGroup::cyclic(2), 2, {Matrix::identity(2), mat({{0, 1}, {1, 0}})}};
    auto f1 = factor_through_lambda(ls, swap, mat({{1}, {0}}));
    CHECK(f1.checks.overall());
    CHECK(f1.unique);
    CHECK(f1.factor == Matrix::identity(2));

    GlobalAction trivial{FiniteGroup::cyclic(2), 1, {Matrix::identity(1), Matrix::identity(1)}};
    auto f2 = factor_through_lambda(ls, trivial, Matrix::identity(1));
    CHECK(f2.checks.overall());
    CHECK(f2.unique);
    CHECK(f2.factor == mat({{1, 1}}));

    auto f3 = factor_through_lambda(ls, swap, mat({{1}, {1}}));
    CHECK(f3.checks.overall());
    CHECK(f3.unique);
    CHECK(f3.factor == mat({{1, 1}, {1, 1}}));
}

TEST_CASE("factorization rejects non-equivariant maps") {
    LambdaSpace ls = build_lambda(z2_global_rep());
    GlobalAction sign{FiniteGroup::cyclic(2), 1,
                      {Matrix::identity(1), Rational(-1) * Matrix::identity(1)}};
    CHECK_THROWS_WITH_AS(factor_through_lambda(ls, sign, Matrix::identity(1)),
                         doctest::Contains("equivariant"), MathError);
}

TEST_CASE("invalid reps cannot build Lambda") {
    PartialRep bad;
    bad.group = FiniteGroup::cyclic(2);
    bad.dim = 2;
    bad.pi = {Matrix::identity(2), mat({{1, 1}, {0, 1}})};
    CHECK_THROWS_WITH_AS(build_lambda(bad), doctest::Contains("InvalidRep"), MathError);
}
