#pragma once

#include "pglob/covariant.hpp"

namespace pglob {

/// Lie algebra L acting by derivations on a Lie algebra M: the module law
/// (x·y)m = x(ym) − y(xm) together with x(m·n) = (xm)·n + m·(xn).
struct DerivationAction {
    Algebra L;
    Algebra M;
    std::vector<Matrix> act;  // per L-basis matrix on M

    Matrix act_of(const Vec& x) const;
};

ValidationReport check_derivation_action(const DerivationAction& da);

/// The semidirect product L⋉M with bracket
/// (x, m)·(y, n) = (x·y, m·n + xn − ym), assembled blockwise.
struct SemidirectProduct {
    DerivationAction base;
    Algebra algebra;  // dim L + dim M, L coordinates first
};

/// Throws MathError("InvalidAction...") when the derivation action fails.
SemidirectProduct semidirect_product(const DerivationAction& da);

/// The product partial representation (λ×π)_g = λ_g ⊕ π_g on L⋉M.
/// Requires (π, M) to be a covariant representation of λ over the derivation
/// action; throws MathError("NotCovariant...") otherwise.
IdealPartialRep product_partial_rep(const IdealPartialRep& lambda, const IdealPartialRep& pi,
                                    const DerivationAction& da);

struct SemidirectIso {
    Algebra lambda_of_semidirect;   // Λ(L⋉M)
    Algebra semidirect_of_lambdas;  // Λ(L)⋉Λ(M)
    std::size_t dim_lambda_L = 0;
    std::size_t dim_lambda_M = 0;
    Matrix psi;  // Λ(L⋉M) → Λ(L)⋉Λ(M)
    Matrix phi;  // inverse direction
    ValidationReport checks;
};

/// Builds both sides of Λ(L⋉M) ≅ Λ(L)⋉Λ(M), the comparison maps
/// ψ⌊g, (x, m)⌋ = (⌊g, x⌋, ⌊g, m⌋) and φ(⌊g, x⌋, ⌊h, m⌋) = ⌊g, (x, 0)⌋ +
/// ⌊h, (0, m)⌋, and verifies that ψ is a G-equivariant Lie isomorphism with
/// inverse φ. Prerequisites (covariance, lifted action by derivations) are
/// hard gates; throws MathError("PrerequisiteFailed...") when they fail.
SemidirectIso check_semidirect_iso(const IdealPartialRep& lambda, const IdealPartialRep& pi,
                                   const DerivationAction& da);

}  // namespace pglob
