#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "pglob/covariant.hpp"
#include "pglob/semidirect.hpp"

namespace pglob {

using json = nlohmann::json;

// Rationals travel as strings "p/q" (or "p"); plain JSON integers are also
// accepted on input.
Rational rational_from_json(const json& j);
json rational_to_json(const Rational& r);

Vec vec_from_json(const json& j);
json vec_to_json(const Vec& v);

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);
json matrix_to_json(const Matrix& m);

json report_to_json(const ValidationReport& rep);
json algebra_to_json(const Algebra& a);
json lambda_to_json(const LambdaSpace& ls);

/// One self-contained document holding named entities. Parsing is purely
/// structural (shapes, references); the mathematical validators run when the
/// typed entities are built.
class Workspace {
public:
    static Workspace parse(const std::string& text);
    static Workspace from_json(const json& doc);

    struct RawGroup {
        std::vector<std::vector<std::size_t>> table;
        std::optional<std::size_t> identity;
    };
    struct RawAlgebra {
        std::size_t dim = 0;
        std::vector<std::vector<Vec>> sc;
        std::optional<Vec> unit;
        std::optional<AlgebraKind> kind;
    };
    struct RawPartialRep {
        std::string group;
        std::optional<std::string> algebra;
        std::size_t dim = 0;
        std::vector<Matrix> pi;
    };
    struct RawPartialAction {
        std::string group;
        std::optional<std::string> algebra;
        std::size_t ambient_dim = 0;
        ActionKind kind = ActionKind::module;
        std::vector<std::vector<Vec>> domains;
        std::vector<Matrix> maps;
    };
    struct RawGlobalAction {
        std::string group;
        std::size_t dim = 0;
        std::vector<Matrix> maps;
    };
    struct RawCovariant {
        std::string lambda;
        std::size_t module_dim = 0;
        std::vector<Matrix> action;
        std::optional<AlgebraKind> action_kind;
        std::vector<Matrix> pi;   // covariant entries
        std::optional<Matrix> T;  // dilation entries carry T and rho
        std::vector<Matrix> rho;
        bool is_dilation() const { return T.has_value(); }
    };
    struct RawDerivation {
        std::string L;
        std::string M;
        std::vector<Matrix> act;
    };

    const std::map<std::string, RawGroup>& groups() const { return groups_; }
    const std::map<std::string, RawAlgebra>& algebras() const { return algebras_; }
    const std::map<std::string, RawPartialRep>& partial_reps() const { return partial_reps_; }
    const std::map<std::string, RawPartialAction>& partial_actions() const {
        return partial_actions_;
    }
    const std::map<std::string, RawGlobalAction>& global_actions() const {
        return global_actions_;
    }
    const std::map<std::string, RawCovariant>& covariant() const { return covariant_; }
    const std::map<std::string, RawDerivation>& derivation_actions() const {
        return derivation_actions_;
    }

    // Typed builders; mathematical failures surface as MathError.
    FiniteGroup build_group(const std::string& name) const;
    Algebra build_algebra(const std::string& name) const;
    std::optional<AlgebraKind> declared_kind(const std::string& algebra_name) const;
    PartialRep build_partial_rep(const std::string& name) const;
    PartialAction build_partial_action(const std::string& name) const;
    GlobalAction build_global_action(const std::string& name) const;
    CovariantRep build_covariant(const std::string& name) const;
    DilatedRep build_dilated(const std::string& name) const;
    DerivationAction build_derivation_action(const std::string& name) const;

    /// Kind used for module actions over this rep's algebra: the declared one
    /// or the inferred one (associative first, then Lie).
    AlgebraKind action_kind_for(const RawCovariant& entry) const;

private:
    std::map<std::string, RawGroup> groups_;
    std::map<std::string, RawAlgebra> algebras_;
    std::map<std::string, RawPartialRep> partial_reps_;
    std::map<std::string, RawPartialAction> partial_actions_;
    std::map<std::string, RawGlobalAction> global_actions_;
    std::map<std::string, RawCovariant> covariant_;
    std::map<std::string, RawDerivation> derivation_actions_;
};

}  // namespace pglob
