#pragma once

#include "helpers.hpp"
#include "pglob/covariant.hpp"
#include "pglob/partial_rep.hpp"
#include "pglob/semidirect.hpp"

namespace pglob::testing {

/// Z/2 on K (e·e = e) with π_g = 0: the textbook non-global fixture.
inline PartialRep z2_zero_rep() {
    PartialRep r;
    r.group = FiniteGroup::cyclic(2);
    r.dim = 1;
    r.pi = {Matrix::identity(1), Matrix(1, 1)};
    r.target_kind = TargetKind::algebra;
    r.algebra = idempotent_line();
    return r;
}

/// Z/2 on K with π_g = id: a global representation.
inline PartialRep z2_global_rep() {
    PartialRep r;
    r.group = FiniteGroup::cyclic(2);
    r.dim = 1;
    r.pi = {Matrix::identity(1), Matrix::identity(1)};
    r.target_kind = TargetKind::algebra;
    r.algebra = idempotent_line();
    return r;
}

/// Z/2 on K×K with π_g the projection onto the first factor: the unital
/// partial-action correspondence fixture (domains K×K and K×{0}).
inline PartialRep z2_projection_rep() {
    PartialRep r;
    r.group = FiniteGroup::cyclic(2);
    r.dim = 2;
    r.pi = {Matrix::identity(2), mat({{1, 0}, {0, 0}})};
    r.target_kind = TargetKind::algebra;
    r.algebra = split_algebra(2);
    return r;
}

/// Z/4 on K×K: π_2 = projection, π_1 = π_3 = 0.
inline PartialRep z4_rep() {
    PartialRep r;
    r.group = FiniteGroup::cyclic(4);
    r.dim = 2;
    r.pi = {Matrix::identity(2), Matrix(2, 2), mat({{1, 0}, {0, 0}}), Matrix(2, 2)};
    r.target_kind = TargetKind::algebra;
    r.algebra = split_algebra(2);
    return r;
}

/// S3 on K with π_g = id at the identity and 0 elsewhere.
inline PartialRep s3_zero_rep() {
    PartialRep r;
    r.group = FiniteGroup::symmetric3();
    r.dim = 1;
    r.pi.assign(6, Matrix(1, 1));
    r.pi[0] = Matrix::identity(1);
    r.target_kind = TargetKind::algebra;
    r.algebra = idempotent_line();
    return r;
}

/// S3 on K via the sign character: a global representation.
inline PartialRep s3_sign_rep() {
    PartialRep r;
    r.group = FiniteGroup::symmetric3();
    r.dim = 1;
    // Permutation indices 0..5 in lexicographic order; odd ones are 1, 2, 5.
    for (std::size_t g = 0; g < 6; ++g) {
        Matrix m(1, 1);
        bool odd = g == 1 || g == 2 || g == 5;
        m(0, 0) = odd ? Rational(-1) : Rational(1);
        r.pi.push_back(m);
    }
    r.target_kind = TargetKind::algebra;
    // The sign maps must be multiplicative: on the zero-multiplication line
    // any linear map is; on e·e = e only ±... (-1)·(-1) = 1 ≠ -1 fails, so
    // use the zero-multiplication algebra here.
    r.algebra = Algebra::zero_multiplication(1);
    return r;
}

/// Z/2 on Heisenberg ⊕ K (Lie): π_g kills the Heisenberg block and fixes
/// the central line K.
inline PartialRep z2_lie_rep() {
    PartialRep r;
    r.group = FiniteGroup::cyclic(2);
    r.dim = 4;
    std::vector<std::vector<Vec>> sc(4, std::vector<Vec>(4, vec_zero(4)));
    sc[0][1] = v({0, 0, 1, 0});
    sc[1][0] = v({0, 0, -1, 0});
    Matrix pg(4, 4);
    pg(3, 3) = Rational(1);
    r.pi = {Matrix::identity(4), pg};
    r.target_kind = TargetKind::algebra;
    r.algebra = Algebra(4, std::move(sc));
    return r;
}

/// Covariant fixture over z2_zero_rep: M = K with the unital action and
/// π^M_g = 0.
inline CovariantRep z2_zero_covariant() {
    CovariantRep c;
    c.lambda = IdealPartialRep{z2_zero_rep()};
    c.action = ModuleAction{idempotent_line(), AlgebraKind::associative, 1,
                            {Matrix::identity(1)}};
    c.pi.group = c.lambda.rep.group;
    c.pi.dim = 1;
    c.pi.pi = {Matrix::identity(1), Matrix(1, 1)};
    c.pi.target_kind = TargetKind::module;
    return c;
}

/// Covariant fixture over z2_projection_rep: M = A with left multiplication
/// and π^M = λ.
inline CovariantRep z2_regular_covariant() {
    CovariantRep c;
    c.lambda = IdealPartialRep{z2_projection_rep()};
    Algebra a = split_algebra(2);
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < 2; ++i) act.push_back(a.left_mult(vec_unit(2, i)));
    c.action = ModuleAction{a, AlgebraKind::associative, 2, act};
    c.pi = c.lambda.rep;
    c.pi.target_kind = TargetKind::module;
    c.pi.algebra.reset();
    return c;
}

/// Two-dimensional partial covariant pair over abelian Lie algebras:
/// λ_σ = π_σ = diag(1, 0) with the compatible diagonal action.
inline CovariantRep z2_partial_lie_covariant() {
    CovariantRep c;
    PartialRep lam;
    lam.group = FiniteGroup::cyclic(2);
    lam.dim = 2;
    lam.pi = {Matrix::identity(2), mat({{1, 0}, {0, 0}})};
    lam.target_kind = TargetKind::algebra;
    lam.algebra = Algebra::zero_multiplication(2);
    c.lambda = IdealPartialRep{lam};
    c.action = ModuleAction{*lam.algebra, AlgebraKind::lie, 2,
                            {mat({{1, 0}, {0, 0}}), mat({{0, 0}, {0, 1}})}};
    c.pi.group = lam.group;
    c.pi.dim = 2;
    c.pi.pi = {Matrix::identity(2), mat({{1, 0}, {0, 0}})};
    c.pi.target_kind = TargetKind::module;
    return c;
}

/// Zero module over z2_zero_rep.
inline CovariantRep z2_zero_module_covariant() {
    CovariantRep c;
    c.lambda = IdealPartialRep{z2_zero_rep()};
    c.action = ModuleAction{idempotent_line(), AlgebraKind::associative, 0, {Matrix(0, 0)}};
    c.pi.group = c.lambda.rep.group;
    c.pi.dim = 0;
    c.pi.pi = {Matrix(0, 0), Matrix(0, 0)};
    c.pi.target_kind = TargetKind::module;
    return c;
}

/// Hand-built dilation over z2_zero_rep that is NOT of the lifted form:
/// W = K² with the swap, zero A-action and T = id.
inline DilatedRep z2_swap_dilation() {
    LambdaSpace ls = build_lambda(IdealPartialRep{z2_zero_rep()});
    std::vector<Matrix> rho = {Matrix::identity(2), mat({{0, 1}, {1, 0}})};
    return make_dilated(std::move(ls), AlgebraKind::associative, rho, {Matrix(2, 2)},
                        Matrix::identity(2));
}

/// Dilation over z2_zero_rep with a third coordinate untouched by the data:
/// W = K³, ρ swaps the first two coordinates, A acts through ι as the
/// projection onto e1, and T is that projection too.
inline DilatedRep z2_padded_dilation() {
    LambdaSpace ls = build_lambda(IdealPartialRep{z2_zero_rep()});
    Matrix swap01(3, 3);
    swap01(0, 1) = swap01(1, 0) = swap01(2, 2) = Rational(1);
    Matrix proj0(3, 3);
    proj0(0, 0) = Rational(1);
    return make_dilated(std::move(ls), AlgebraKind::associative,
                        {Matrix::identity(3), swap01}, {proj0}, proj0);
}

/// Z/2 pair of 1-dim abelian Lie algebras with zero partial reps for g ≠ 1
/// and the action x·m = m.
inline std::tuple<IdealPartialRep, IdealPartialRep, DerivationAction> z2_semidirect_fixture() {
    PartialRep lam;
    lam.group = FiniteGroup::cyclic(2);
    lam.dim = 1;
    lam.pi = {Matrix::identity(1), Matrix(1, 1)};
    lam.target_kind = TargetKind::algebra;
    lam.algebra = Algebra::zero_multiplication(1);
    PartialRep pi = lam;
    DerivationAction da{Algebra::zero_multiplication(1), Algebra::zero_multiplication(1),
                        {Matrix::identity(1)}};
    return {IdealPartialRep{lam}, IdealPartialRep{pi}, da};
}

}  // namespace pglob::testing
