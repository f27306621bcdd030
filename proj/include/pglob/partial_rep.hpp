#pragma once

#include <optional>
#include <vector>

#include "pglob/algebra.hpp"
#include "pglob/group.hpp"
#include "pglob/partial_action.hpp"
#include "pglob/report.hpp"

namespace pglob {

enum class TargetKind { module, algebra };

/// Candidate partial representation π : G → End(M), one square matrix per
/// group element. When target_kind is algebra, each π_g must additionally be
/// multiplicative for the attached algebra.
struct PartialRep {
    FiniteGroup group;
    std::size_t dim = 0;
    std::vector<Matrix> pi;  // indexed by group element
    TargetKind target_kind = TargetKind::module;
    std::optional<Algebra> algebra;

    const Matrix& at(std::size_t g) const { return pi.at(g); }
    /// ε_g = π_g π_{g⁻¹}.
    Matrix epsilon(std::size_t g) const { return pi.at(g) * pi.at(group.inv(g)); }

    friend bool operator==(const PartialRep& a, const PartialRep& b) {
        return a.group == b.group && a.dim == b.dim && a.pi == b.pi;
    }
};

/// The three axioms as exact matrix identities, plus multiplicativity for
/// algebra targets. All pairs (g, h) are checked; no sampling.
ValidationReport check_partial_rep(const PartialRep& rep);

/// ε_g = id for every g.
bool is_global_rep(const PartialRep& rep);

/// Partial representation whose images are bilateral ideals; carries the
/// target algebra. Use make_ideal_partial_rep to construct with validation.
struct IdealPartialRep {
    PartialRep rep;  // target_kind algebra, with algebra set
    const Algebra& algebra() const { return *rep.algebra; }
};

/// Image ideality per element plus the derived product-compatibility
/// relation π_g(a)π_h(b) = π_g(a·π_{g⁻¹h}(b)) on all basis pairs.
ValidationReport check_ideal_condition(const PartialRep& rep);

/// Validates rep axioms + ideal condition; throws MathError on failure.
IdealPartialRep make_ideal_partial_rep(PartialRep rep);

/// The induced partial action: domains im π_g, maps π_g. Kind follows the
/// target (and the ideal check for algebra targets).
PartialAction induced_partial_action(const PartialRep& rep);

/// Inverse direction of the unital correspondence: local units 1_g are found
/// by exact solve inside each domain, then π_g(a) = α_g(1_{g⁻¹}·a).
/// Throws MathError("NoLocalUnit(g)...") when a nonzero domain has no unit.
IdealPartialRep rep_from_unital_action(const PartialAction& action);

}  // namespace pglob
