#pragma once

#include <optional>
#include <vector>

#include "pglob/algebra.hpp"
#include "pglob/group.hpp"
#include "pglob/linalg.hpp"
#include "pglob/report.hpp"

namespace pglob {

enum class ActionKind { module, ideal_algebra, generalized_algebra };

std::string action_kind_name(ActionKind k);
ActionKind action_kind_from_name(const std::string& name);

/// Partial action of a finite group: per-element domain subspaces X_g and
/// partial isomorphisms θ_g : X_{g⁻¹} → X_g. Each θ_g is stored as a full
/// ambient matrix; only its restriction to the domain is meaningful, and all
/// checks quantify over domain bases.
struct PartialAction {
    FiniteGroup group;
    std::size_t ambient_dim = 0;
    std::vector<Subspace> domains;  // indexed by group element
    std::vector<Matrix> maps;       // indexed by group element
    ActionKind kind = ActionKind::module;
    std::optional<Algebra> algebra;  // present for the algebra kinds
};

/// Global action: one invertible matrix per group element with
/// map[g]·map[h] = map[gh] and map[1] = id.
struct GlobalAction {
    FiniteGroup group;
    std::size_t dim = 0;
    std::vector<Matrix> maps;
};

ValidationReport check_global_action(const GlobalAction& ga);

/// Verifies all partial-action axioms; failed conditions carry witnesses.
ValidationReport check_partial_action(const PartialAction& pa);

/// Views a global action as a partial action with full domains.
PartialAction as_partial_action(const GlobalAction& ga, ActionKind kind = ActionKind::module,
                                std::optional<Algebra> algebra = std::nullopt);

enum class RestrictRequire { none, ideal, subalgebra };

/// Restriction of a global action to a subspace S: domains S ∩ map[g](S),
/// maps the global ones. When `require` asks for closure, S must be an ideal
/// or subalgebra of the supplied algebra (error "NotClosed" otherwise).
PartialAction restrict_global(const GlobalAction& ga, const Subspace& s, RestrictRequire require,
                              std::optional<Algebra> algebra = std::nullopt);

/// φ(A_g) ⊆ B_g and φ∘α_g = β_g∘φ on the domains.
bool check_equivariant(const Matrix& phi, const PartialAction& src, const PartialAction& dst);

}  // namespace pglob
