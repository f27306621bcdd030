#include <doctest.h>

#include "fixtures.hpp"
#include "pglob/semidirect.hpp"

using namespace pglob;
using namespace pglob::testing;

TEST_CASE("derivation action checks: zero, adjoint, broken") {
    // Zero action of any Lie algebra is valid.
    DerivationAction zero{Algebra::zero_multiplication(2), heisenberg_algebra(),
                          {Matrix(3, 3), Matrix(3, 3)}};
    CHECK(check_derivation_action(zero).overall());

    // The adjoint action of sl2 on itself acts by derivations (Jacobi).
    Algebra l = sl2_algebra();
    std::vector<Matrix> ad;
    for (std::size_t i = 0; i < 3; ++i) ad.push_back(l.left_mult(vec_unit(3, i)));
    DerivationAction adjoint{l, l, ad};
    CHECK(check_derivation_action(adjoint).overall());

    // Scaling by 2 breaks the derivation law on a non-abelian M.
    DerivationAction scaled{Algebra::zero_multiplication(1), heisenberg_algebra(),
                            {Rational(2) * Matrix::identity(3)}};
    auto rep = check_derivation_action(scaled);
    CHECK_FALSE(rep.overall());
    CHECK_FALSE(rep.passed("derivation_law"));
}

TEST_CASE("semidirect products: abelian sum and the scalar case") {
    // Zero action of two abelian lines: the abelian plane.
    DerivationAction zeros{Algebra::zero_multiplication(1), Algebra::zero_multiplication(1),
                           {Matrix(1, 1)}};
    SemidirectProduct sum = semidirect_product(zeros);
    CHECK(is_lie(sum.algebra));
    CHECK(sum.algebra.multiply(v({1, 0}), v({0, 1})) == v({0, 0}));

    // 1-dim L acting on 1-dim abelian M by the scalar c = 3:
    // bracket((1,0),(0,1)) = (0, 3).
    DerivationAction scalar{Algebra::zero_multiplication(1), Algebra::zero_multiplication(1),
                            {Rational(3) * Matrix::identity(1)}};
    SemidirectProduct sp = semidirect_product(scalar);
    CHECK(is_lie(sp.algebra));
    CHECK(sp.algebra.multiply(v({1, 0}), v({0, 1})) == v({0, 3}));
    CHECK(sp.algebra.multiply(v({0, 1}), v({1, 0})) == v({0, -3}));

    // The adjoint case passes the Lie check too.
    Algebra l = sl2_algebra();
    std::vector<Matrix> ad;
    for (std::size_t i = 0; i < 3; ++i) ad.push_back(l.left_mult(vec_unit(3, i)));
    SemidirectProduct adj = semidirect_product(DerivationAction{l, l, ad});
    CHECK(is_lie(adj.algebra));
    // L×0 is a subalgebra and 0×M is an ideal.
    Subspace lpart = Subspace::span(6, {vec_unit(6, 0), vec_unit(6, 1), vec_unit(6, 2)});
    Subspace mpart = Subspace::span(6, {vec_unit(6, 3), vec_unit(6, 4), vec_unit(6, 5)});
    CHECK(is_subalgebra(adj.algebra, lpart));
    CHECK(is_ideal(adj.algebra, mpart));
}

TEST_CASE("product partial representation on the semidirect sum") {
    auto [lam, pi, da] = z2_semidirect_fixture();
    IdealPartialRep sd = product_partial_rep(lam, pi, da);
    CHECK(check_partial_rep(sd.rep).overall());
    CHECK(check_ideal_condition(sd.rep).overall());
    CHECK(sd.rep.dim == 2);
    CHECK(sd.rep.pi[1].is_zero());

    // Trivial group: the identity rep.
    PartialRep tl;
    tl.group = FiniteGroup::cyclic(1);
    tl.dim = 1;
    tl.pi = {Matrix::identity(1)};
    tl.target_kind = TargetKind::algebra;
    tl.algebra = Algebra::zero_multiplication(1);
    DerivationAction da1{Algebra::zero_multiplication(1), Algebra::zero_multiplication(1),
                         {Rational(2) * Matrix::identity(1)}};
    IdealPartialRep triv = product_partial_rep(IdealPartialRep{tl}, IdealPartialRep{tl}, da1);
    CHECK(triv.rep.pi[0].is_identity());
}

TEST_CASE("non-covariant data is rejected") {
    auto [lam, pi, da] = z2_semidirect_fixture();
    // Make pi_sigma = id while lambda_sigma = 0: breaks condition (2)
    // because epsilon_sigma = id but e_sigma = 0 and the action is unital.
    IdealPartialRep pi_bad = pi;
    pi_bad.rep.pi[1] = Matrix::identity(1);
    CHECK_THROWS_WITH_AS(product_partial_rep(lam, pi_bad, da), doctest::Contains("NotCovariant"),
                         MathError);
}

TEST_CASE("semidirect isomorphism on the Z/2 fixture: both sides dim 4") {
    auto [lam, pi, da] = z2_semidirect_fixture();
    SemidirectIso iso = check_semidirect_iso(lam, pi, da);
    CHECK(iso.checks.overall());
    CHECK(iso.dim_lambda_L == 2);
    CHECK(iso.dim_lambda_M == 2);
    CHECK(iso.lambda_of_semidirect.dim() == 4);
    CHECK(iso.psi * iso.phi == Matrix::identity(4));
    CHECK(iso.phi * iso.psi == Matrix::identity(4));
}

TEST_CASE("semidirect isomorphism for global reps: both sides are L⋉M") {
    // Global sign action of Z/2 on sl2 ⋉ sl2 (adjoint): lambda = pi = id maps.
    Algebra l = sl2_algebra();
    std::vector<Matrix> ad;
    for (std::size_t i = 0; i < 3; ++i) ad.push_back(l.left_mult(vec_unit(3, i)));
    DerivationAction da{l, l, ad};
    PartialRep lam;
    lam.group = FiniteGroup::cyclic(2);
    lam.dim = 3;
    lam.pi = {Matrix::identity(3), Matrix::identity(3)};
    lam.target_kind = TargetKind::algebra;
    lam.algebra = l;
    SemidirectIso iso = check_semidirect_iso(IdealPartialRep{lam}, IdealPartialRep{lam}, da);
    CHECK(iso.checks.overall());
    CHECK(iso.lambda_of_semidirect.dim() == 6);
    CHECK(is_lie(iso.lambda_of_semidirect));
}

TEST_CASE("semidirect isomorphism with a nontrivial partial pair") {
    // 2-dim abelian L and M with diag(1,0) partial reps and the compatible
    // diagonal action, as in the covariant fixture.
    CovariantRep c = z2_partial_lie_covariant();
    IdealPartialRep lam = c.lambda;
    IdealPartialRep pi{c.pi};
    pi.rep.target_kind = TargetKind::algebra;
    pi.rep.algebra = Algebra::zero_multiplication(2);
    DerivationAction da{*lam.rep.algebra, *pi.rep.algebra, c.action.act};
    SemidirectIso iso = check_semidirect_iso(lam, pi, da);
    CHECK(iso.checks.overall());
    CHECK(iso.lambda_of_semidirect.dim() == iso.dim_lambda_L + iso.dim_lambda_M);
}
