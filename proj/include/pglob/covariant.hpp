#pragma once

#include <vector>

#include "pglob/lambda.hpp"

namespace pglob {

enum class AlgebraKind { associative, lie };

std::string algebra_kind_name(AlgebraKind k);
AlgebraKind algebra_kind_from_name(const std::string& name);

/// Module structure over an associative or Lie algebra A: one matrix per
/// A-basis element, extended bilinearly. The law checked depends on the kind:
/// act(x·y) = act(x)act(y) for associative A, and
/// act(x·y) = act(x)act(y) − act(y)act(x) for Lie A.
struct ModuleAction {
    Algebra algebra;
    AlgebraKind kind = AlgebraKind::associative;
    std::size_t module_dim = 0;
    std::vector<Matrix> act;  // indexed by A-basis

    Matrix act_of(const Vec& x) const;
};

ValidationReport check_module_action(const ModuleAction& ma);

/// Covariant representation of an ideal partial representation λ on A: an
/// A-module M with a partial representation π on M satisfying
///   π_g(x m) = λ_g(x) π_g(m)   and   ε_g(x m) = e_g(x) m = x ε_g(m).
struct CovariantRep {
    IdealPartialRep lambda;
    ModuleAction action;  // action of A on the module
    PartialRep pi;        // partial rep on the module
};

ValidationReport check_covariant(const CovariantRep& c);

/// Dilated covariant representation of Λ(λ): a global representation ρ of G
/// on W, a Λ(A)-module structure on W (stored through its values on the
/// generating classes ⌊g, e_i⌋) and an idempotent Λ(A)-module map T.
struct DilatedRep {
    LambdaSpace lambda_space;  // Λ over λ, with product
    AlgebraKind kind = AlgebraKind::associative;
    std::size_t w_dim = 0;
    std::vector<Matrix> rho;              // per group element
    std::vector<std::vector<Matrix>> act; // act[g][i]: action of ⌊g, e_i⌋ on W
    Matrix T;

    const Matrix& act_gen(std::size_t g, std::size_t i) const { return act.at(g).at(i); }
    /// Action of the class with quotient coordinates z.
    Matrix act_class(const Vec& z) const;
    /// Action of ι(x) for x in A-coordinates.
    Matrix act_iota(const Vec& x) const;
};

/// Builds a dilated rep from an A-action on W (through ι), a candidate global
/// rep ρ and T; the action of ⌊g, x⌋ is ρ_g∘act(x)∘ρ_{g⁻¹}.
DilatedRep make_dilated(LambdaSpace lambda_space, AlgebraKind kind, std::vector<Matrix> rho,
                        std::vector<Matrix> act_on_A_basis, Matrix T);

ValidationReport check_dilated(const DilatedRep& d);

struct LiftResult {
    DilatedRep dilated;
    LambdaSpace module_lambda;  // Λ(M) over π; W of the dilation is its quotient
};

/// The functor Λ on objects: Λ(M) as a Λ(A)-module with ρ = Λ(π) and
/// T⌊h, m⌋ = ⌊1, π_h(m)⌋. Throws MathError("InvalidCovariant...") when the
/// input fails its axioms.
LiftResult lift_to_lambda(const CovariantRep& c);

/// The functor 𝓕: restricts a dilation to (ξ, T(W)) with ξ_g = Tρ_g|_{T(W)},
/// in RREF coordinates on T(W). Throws MathError("InvalidDilation...") when
/// the dilation fails its axioms.
CovariantRep functor_F(const DilatedRep& d);

/// Basis of the space of morphisms of covariant representations (A-module
/// maps intertwining the partial representations), by exact null-space
/// computation. Requires the same λ on both sides.
std::vector<Matrix> hom_space(const CovariantRep& src, const CovariantRep& dst);
/// Same for dilations: additionally intertwines ρ and the T's.
std::vector<Matrix> hom_space(const DilatedRep& src, const DilatedRep& dst);

struct AdjunctionResult {
    ValidationReport checks;
    std::size_t dim_hom_dilated = 0;    // dim Hom(Λ(c), d)
    std::size_t dim_hom_covariant = 0;  // dim Hom(c, 𝓕(d))
};

/// Verifies the adjunction data between Λ(c) and d: η and δ are mutually
/// inverse bijections between the two hom-spaces, and both naturality squares
/// commute on bases of test morphisms.
AdjunctionResult check_adjunction(const CovariantRep& c, const DilatedRep& d);

}  // namespace pglob
