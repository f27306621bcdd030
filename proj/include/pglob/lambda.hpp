#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pglob/partial_rep.hpp"
#include "pglob/varieties.hpp"

namespace pglob {

/// The Λ-construction for a partial representation π of G on a module (or
/// algebra) M of dimension d: the quotient of the |G|·d-dimensional space
/// KG ⊗ M, with coordinates (g, i) ordered lexicographically, by the span of
///
///     g ⊗ π_h(m) − gh ⊗ m     for m = π_{h⁻¹}(basis vector),
///
/// carrying the induced global action Θ_g⌊h, m⌋ = ⌊gh, m⌋, the embedding
/// ι(m) = ⌊1, m⌋ and the retraction τ⌊g, m⌋ = π_g(m).
///
/// When π is an ideal partial representation on an algebra, the quotient also
/// carries the product ⌊g, a⌋·⌊h, b⌋ = ⌊g, a·π_{g⁻¹h}(b)⌋, materialized as a
/// structure-constant algebra on the quotient coordinates. If the ideal
/// condition fails the module-level data is still built and the product is
/// refused with a reason.
class LambdaSpace {
public:
    LambdaSpace() : quotient_(make_quotient(0, {})) {}  // empty placeholder

    const PartialRep& rep() const { return rep_; }
    const FiniteGroup& group() const { return rep_.group; }
    std::size_t block_dim() const { return rep_.dim; }
    std::size_t ambient_dim() const { return quotient_.ambient_dim(); }
    std::size_t dim() const { return quotient_.dim(); }

    const QuotientSpace& quotient() const { return quotient_; }
    const Matrix& theta(std::size_t g) const { return theta_.at(g); }
    const Matrix& iota() const { return iota_; }
    const Matrix& tau() const { return tau_; }

    std::size_t flat(std::size_t g, std::size_t i) const { return g * rep_.dim + i; }
    /// The ambient vector placing m in block g.
    Vec embed(std::size_t g, const Vec& m) const;
    /// Quotient coordinates of the class ⌊g, m⌋.
    Vec class_of(std::size_t g, const Vec& m) const;

    bool has_product() const { return product_.has_value(); }
    const std::string& product_refusal() const { return product_refusal_; }
    /// Λ(M) as an algebra on quotient coordinates; throws when refused.
    const Algebra& product_algebra() const;
    /// Product of two quotient-coordinate vectors.
    Vec product(const Vec& x, const Vec& y) const;

    friend LambdaSpace build_lambda(const PartialRep& rep);

private:
    PartialRep rep_;
    QuotientSpace quotient_;
    std::vector<Matrix> theta_;
    Matrix iota_;
    Matrix tau_;
    std::optional<Algebra> product_;
    std::string product_refusal_;
};

/// Builds Λ over a validated partial representation (throws InvalidRep
/// otherwise). All structural invariants are verified during construction.
LambdaSpace build_lambda(const PartialRep& rep);
LambdaSpace build_lambda(const IdealPartialRep& rep);

/// The relation generators g ⊗ π_h π_{h⁻¹}(v) − gh ⊗ π_{h⁻¹}(v) over all
/// g, h and basis v, as ambient vectors.
std::vector<Vec> lambda_relations(const PartialRep& rep);

/// Product well-definedness: both product formulas agree on all generator
/// pairs and the defining bilinear map kills the relations in each argument.
ValidationReport check_product_well_defined(const LambdaSpace& ls);

/// Membership of Λ(A) in the variety cut out by the given multilinear
/// identities: hypothesis (a variable covering every monomial), vanishing on
/// all quotient-basis tuples, and the single-block collapse identity on
/// generator tuples. Throws MathError("HypothesisFailed...") when some
/// identity has an empty monomial cover.
ValidationReport check_variety(const LambdaSpace& ls, const std::vector<Polynomial>& identities);

/// The globalization conditions for (Θ, ι) over an ideal partial rep:
/// ι injective multiplicative, ι(A) a bilateral ideal, the restriction of Θ
/// to ι(A) isomorphic to the induced partial action, Λ(A) = Σ_g Θ_g(ι(A)),
/// τ∘ι = id, τ multiplicative, and the ideal universal condition for Θ.
ValidationReport check_globalization(const LambdaSpace& ls);

/// Another candidate globalization (Θ', B, ι') of the same partial action.
struct GlobalizationCandidate {
    GlobalAction action;
    Algebra algebra;
    Matrix embedding;  // B.dim × d
};

struct ComparisonResult {
    Matrix phi;  // Λ(A) → B on quotient coordinates
    ValidationReport checks;
};

/// The comparison morphism φ(⌊g, a⌋) = Θ'_g(ι'(a)). The candidate must be a
/// globalization satisfying the ideal universal condition; otherwise throws
/// MathError("PrerequisiteFailed...").
ComparisonResult compare_globalization(const LambdaSpace& ls, const GlobalizationCandidate& other);

struct FactorizationResult {
    Matrix factor;  // quotient → X with factor∘ι = ψ
    bool unique = false;
    ValidationReport checks;
};

/// Universal property at the module level: factors an equivariant ψ: M → X
/// through ι as ψ̃(⌊g, m⌋) = β_g(ψ(m)) and certifies uniqueness by solving
/// the full linear factorization system.
FactorizationResult factor_through_lambda(const LambdaSpace& ls, const GlobalAction& beta,
                                          const Matrix& psi);

}  // namespace pglob
