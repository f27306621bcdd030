#include "pglob/io.hpp"

namespace pglob {

Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw InputError("expected a rational as \"p/q\" string or integer, got: " + j.dump());
}

json rational_to_json(const Rational& r) { return r.str(); }

Vec vec_from_json(const json& j) {
    if (!j.is_array()) throw InputError("expected an array for a vector, got: " + j.dump());
    Vec v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

json vec_to_json(const Vec& v) {
    json j = json::array();
    for (const auto& x : v) j.push_back(rational_to_json(x));
    return j;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array()) throw InputError("expected an array of rows for a matrix");
    if (j.size() != rows)
        throw InputError("matrix has " + std::to_string(j.size()) + " rows, expected " +
                         std::to_string(rows));
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        Vec row = vec_from_json(j[i]);
        if (row.size() != cols)
            throw InputError("matrix row " + std::to_string(i) + " has " +
                             std::to_string(row.size()) + " entries, expected " +
                             std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = row[c];
    }
    return m;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
    return rows;
}

json report_to_json(const ValidationReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks()) {
        json e = {{"name", c.name}, {"pass", c.pass}};
        if (!c.pass && !c.witness.empty()) e["witness"] = c.witness;
        checks.push_back(e);
    }
    return {{"checks", checks}, {"overall", rep.overall()}};
}

json algebra_to_json(const Algebra& a) {
    json sc = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(vec_to_json(a.basis_product(i, j)));
        sc.push_back(row);
    }
    json out = {{"dim", a.dim()}, {"sc", sc}};
    if (a.unit()) out["unit"] = vec_to_json(*a.unit());
    return out;
}

json lambda_to_json(const LambdaSpace& ls) {
    json theta = json::object();
    for (std::size_t g = 0; g < ls.group().order(); ++g)
        theta[std::to_string(g)] = matrix_to_json(ls.theta(g));
    json free = json::array();
    for (auto f : ls.quotient().free_coords())
        free.push_back(json::array({f / ls.block_dim(), f % ls.block_dim()}));
    json out = {{"dim", ls.dim()},
                {"ambient_dim", ls.ambient_dim()},
                {"relation_rank", ls.quotient().relations().dim()},
                {"free_coordinates", free},
                {"theta", theta},
                {"iota", matrix_to_json(ls.iota())},
                {"tau", matrix_to_json(ls.tau())}};
    if (ls.has_product())
        out["structure_constants"] = algebra_to_json(ls.product_algebra())["sc"];
    else
        out["product_refusal"] = ls.product_refusal();
    return out;
}

namespace {

const json& field(const json& j, const std::string& key, const std::string& ctx) {
    auto it = j.find(key);
    if (it == j.end()) throw InputError(ctx + ": missing field \"" + key + "\"");
    return *it;
}

std::size_t index_field(const json& j, const std::string& ctx) {
    if (!j.is_number_unsigned()) throw InputError(ctx + ": expected a nonnegative integer");
    return j.get<std::size_t>();
}

/// Per-group-element maps come as an object { "<element index>": matrix }
/// with every element present.
std::vector<Matrix> per_element_matrices(const json& j, std::size_t n, std::size_t rows,
                                         std::size_t cols, const std::string& ctx) {
    if (!j.is_object()) throw InputError(ctx + ": expected an object keyed by element index");
    std::vector<Matrix> out;
    for (std::size_t g = 0; g < n; ++g) {
        auto it = j.find(std::to_string(g));
        if (it == j.end())
            throw InputError(ctx + ": missing matrix for group element " + std::to_string(g));
        out.push_back(matrix_from_json(*it, rows, cols));
    }
    if (j.size() != n) throw InputError(ctx + ": extra keys beyond the group elements");
    return out;
}

}  // namespace

Workspace Workspace::parse(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("ParseError: ") + e.what());
    }
    return from_json(doc);
}

Workspace Workspace::from_json(const json& doc) {
    if (!doc.is_object()) throw InputError("document root must be an object");
    static const char* known[] = {"groups",        "algebras",  "partial_reps",
                                  "partial_actions", "global_actions", "covariant",
                                  "derivation_actions"};
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        bool ok = false;
        for (auto* k : known)
            if (it.key() == k) ok = true;
        if (!ok) throw InputError("UnknownKind: unexpected top-level key \"" + it.key() + "\"");
    }

    Workspace ws;
    if (doc.contains("groups")) {
        for (auto it = doc["groups"].begin(); it != doc["groups"].end(); ++it) {
            const std::string ctx = "groups/" + it.key();
            RawGroup g;
            const json& tj = field(*it, "table", ctx);
            if (!tj.is_array()) throw InputError(ctx + ": table must be an array of rows");
            for (const auto& row : tj) {
                std::vector<std::size_t> r;
                for (const auto& x : row) r.push_back(index_field(x, ctx));
                g.table.push_back(std::move(r));
            }
            if (it->contains("order") &&
                index_field((*it)["order"], ctx) != g.table.size())
                throw InputError(ctx + ": declared order does not match the table");
            if (it->contains("identity")) g.identity = index_field((*it)["identity"], ctx);
            ws.groups_[it.key()] = std::move(g);
        }
    }
    if (doc.contains("algebras")) {
        for (auto it = doc["algebras"].begin(); it != doc["algebras"].end(); ++it) {
            const std::string ctx = "algebras/" + it.key();
            RawAlgebra a;
            a.dim = index_field(field(*it, "dim", ctx), ctx);
            const json& sc = field(*it, "sc", ctx);
            if (!sc.is_array() || sc.size() != a.dim)
                throw InputError(ctx + ": sc must be a dim-length array");
            for (const auto& row : sc) {
                if (!row.is_array() || row.size() != a.dim)
                    throw InputError(ctx + ": sc rows must have length dim");
                std::vector<Vec> r;
                for (const auto& cell : row) {
                    Vec v = vec_from_json(cell);
                    if (v.size() != a.dim)
                        throw InputError(ctx + ": sc entries must be dim-length vectors");
                    r.push_back(std::move(v));
                }
                a.sc.push_back(std::move(r));
            }
            if (it->contains("unit")) {
                a.unit = vec_from_json((*it)["unit"]);
                if (a.unit->size() != a.dim) throw InputError(ctx + ": unit has wrong length");
            }
            if (it->contains("kind"))
                a.kind = algebra_kind_from_name((*it)["kind"].get<std::string>());
            ws.algebras_[it.key()] = std::move(a);
        }
    }

    auto group_order = [&ws](const std::string& name, const std::string& ctx) {
        auto it = ws.groups_.find(name);
        if (it == ws.groups_.end())
            throw InputError(ctx + ": unknown group \"" + name + "\"");
        return it->second.table.size();
    };
    auto algebra_dim = [&ws](const std::string& name, const std::string& ctx) {
        auto it = ws.algebras_.find(name);
        if (it == ws.algebras_.end())
            throw InputError(ctx + ": unknown algebra \"" + name + "\"");
        return it->second.dim;
    };

    if (doc.contains("partial_reps")) {
        for (auto it = doc["partial_reps"].begin(); it != doc["partial_reps"].end(); ++it) {
            const std::string ctx = "partial_reps/" + it.key();
            RawPartialRep r;
            r.group = field(*it, "group", ctx).get<std::string>();
            const std::size_t n = group_order(r.group, ctx);
            if (it->contains("algebra")) {
                r.algebra = (*it)["algebra"].get<std::string>();
                r.dim = algebra_dim(*r.algebra, ctx);
            }
            const json& pj = field(*it, "pi", ctx);
            if (!r.algebra) {
                if (!it->contains("dim"))
                    throw InputError(ctx + ": module-level reps need an explicit dim");
                r.dim = index_field((*it)["dim"], ctx);
            } else if (it->contains("dim") && index_field((*it)["dim"], ctx) != r.dim) {
                throw InputError(ctx + ": dim disagrees with the algebra dimension");
            }
            r.pi = per_element_matrices(pj, n, r.dim, r.dim, ctx);
            ws.partial_reps_[it.key()] = std::move(r);
        }
    }
    if (doc.contains("partial_actions")) {
        for (auto it = doc["partial_actions"].begin(); it != doc["partial_actions"].end(); ++it) {
            const std::string ctx = "partial_actions/" + it.key();
            RawPartialAction a;
            a.group = field(*it, "group", ctx).get<std::string>();
            const std::size_t n = group_order(a.group, ctx);
            a.kind = action_kind_from_name(field(*it, "kind", ctx).get<std::string>());
            if (it->contains("algebra")) {
                a.algebra = (*it)["algebra"].get<std::string>();
                a.ambient_dim = algebra_dim(*a.algebra, ctx);
            } else {
                if (a.kind != ActionKind::module)
                    throw InputError(ctx + ": algebra kinds need an algebra reference");
                a.ambient_dim = index_field(field(*it, "ambient_dim", ctx), ctx);
            }
            const json& dj = field(*it, "domains", ctx);
            if (!dj.is_object()) throw InputError(ctx + ": domains must be an object");
            for (std::size_t g = 0; g < n; ++g) {
                auto dit = dj.find(std::to_string(g));
                if (dit == dj.end())
                    throw InputError(ctx + ": missing domain for element " + std::to_string(g));
                std::vector<Vec> basis;
                for (const auto& v : *dit) {
                    Vec vv = vec_from_json(v);
                    if (vv.size() != a.ambient_dim)
                        throw InputError(ctx + ": domain vector has wrong length");
                    basis.push_back(std::move(vv));
                }
                a.domains.push_back(std::move(basis));
            }
            a.maps = per_element_matrices(field(*it, "maps", ctx), n, a.ambient_dim,
                                          a.ambient_dim, ctx);
            ws.partial_actions_[it.key()] = std::move(a);
        }
    }
    if (doc.contains("global_actions")) {
        for (auto it = doc["global_actions"].begin(); it != doc["global_actions"].end(); ++it) {
            const std::string ctx = "global_actions/" + it.key();
            RawGlobalAction a;
            a.group = field(*it, "group", ctx).get<std::string>();
            const std::size_t n = group_order(a.group, ctx);
            a.dim = index_field(field(*it, "dim", ctx), ctx);
            a.maps = per_element_matrices(field(*it, "maps", ctx), n, a.dim, a.dim, ctx);
            ws.global_actions_[it.key()] = std::move(a);
        }
    }
    if (doc.contains("covariant")) {
        for (auto it = doc["covariant"].begin(); it != doc["covariant"].end(); ++it) {
            const std::string ctx = "covariant/" + it.key();
            RawCovariant c;
            c.lambda = field(*it, "lambda", ctx).get<std::string>();
            auto rit = ws.partial_reps_.find(c.lambda);
            if (rit == ws.partial_reps_.end())
                throw InputError(ctx + ": unknown partial rep \"" + c.lambda + "\"");
            if (!rit->second.algebra)
                throw InputError(ctx + ": the lambda rep must target an algebra");
            const std::size_t n = group_order(rit->second.group, ctx);
            const std::size_t dA = rit->second.dim;
            c.module_dim = index_field(field(*it, "module_dim", ctx), ctx);
            const json& aj = field(*it, "action", ctx);
            if (!aj.is_array() || aj.size() != dA)
                throw InputError(ctx + ": action must list one matrix per algebra basis element");
            for (const auto& m : aj)
                c.action.push_back(matrix_from_json(m, c.module_dim, c.module_dim));
            if (it->contains("action_kind"))
                c.action_kind = algebra_kind_from_name((*it)["action_kind"].get<std::string>());
            const bool has_T = it->contains("T");
            const bool has_rho = it->contains("rho");
            if (has_T != has_rho)
                throw InputError(ctx + ": dilations need both T and rho");
            if (has_T) {
                if (it->contains("pi"))
                    throw InputError(ctx + ": an entry is either covariant (pi) or dilated "
                                           "(T, rho), not both");
                c.T = matrix_from_json((*it)["T"], c.module_dim, c.module_dim);
                c.rho = per_element_matrices((*it)["rho"], n, c.module_dim, c.module_dim, ctx);
            } else {
                c.pi = per_element_matrices(field(*it, "pi", ctx), n, c.module_dim, c.module_dim,
                                            ctx);
            }
            ws.covariant_[it.key()] = std::move(c);
        }
    }
    if (doc.contains("derivation_actions")) {
        for (auto it = doc["derivation_actions"].begin(); it != doc["derivation_actions"].end();
             ++it) {
            const std::string ctx = "derivation_actions/" + it.key();
            RawDerivation d;
            d.L = field(*it, "L", ctx).get<std::string>();
            d.M = field(*it, "M", ctx).get<std::string>();
            const std::size_t dL = algebra_dim(d.L, ctx);
            const std::size_t dM = algebra_dim(d.M, ctx);
            const json& aj = field(*it, "act", ctx);
            if (!aj.is_array() || aj.size() != dL)
                throw InputError(ctx + ": act must list one matrix per L-basis element");
            for (const auto& m : aj) d.act.push_back(matrix_from_json(m, dM, dM));
            ws.derivation_actions_[it.key()] = std::move(d);
        }
    }
    return ws;
}

FiniteGroup Workspace::build_group(const std::string& name) const {
    auto it = groups_.find(name);
    if (it == groups_.end()) throw InputError("unknown group \"" + name + "\"");
    return FiniteGroup::validate(it->second.table, it->second.identity);
}

Algebra Workspace::build_algebra(const std::string& name) const {
    auto it = algebras_.find(name);
    if (it == algebras_.end()) throw InputError("unknown algebra \"" + name + "\"");
    return Algebra(it->second.dim, it->second.sc, it->second.unit);
}

std::optional<AlgebraKind> Workspace::declared_kind(const std::string& algebra_name) const {
    auto it = algebras_.find(algebra_name);
    if (it == algebras_.end()) throw InputError("unknown algebra \"" + algebra_name + "\"");
    return it->second.kind;
}

PartialRep Workspace::build_partial_rep(const std::string& name) const {
    auto it = partial_reps_.find(name);
    if (it == partial_reps_.end()) throw InputError("unknown partial rep \"" + name + "\"");
    PartialRep r;
    r.group = build_group(it->second.group);
    r.dim = it->second.dim;
    r.pi = it->second.pi;
    if (it->second.algebra) {
        r.target_kind = TargetKind::algebra;
        r.algebra = build_algebra(*it->second.algebra);
    }
    return r;
}

PartialAction Workspace::build_partial_action(const std::string& name) const {
    auto it = partial_actions_.find(name);
    if (it == partial_actions_.end()) throw InputError("unknown partial action \"" + name + "\"");
    PartialAction a;
    a.group = build_group(it->second.group);
    a.ambient_dim = it->second.ambient_dim;
    a.kind = it->second.kind;
    if (it->second.algebra) a.algebra = build_algebra(*it->second.algebra);
    for (const auto& basis : it->second.domains)
        a.domains.push_back(Subspace::span(a.ambient_dim, basis));
    a.maps = it->second.maps;
    return a;
}

GlobalAction Workspace::build_global_action(const std::string& name) const {
    auto it = global_actions_.find(name);
    if (it == global_actions_.end()) throw InputError("unknown global action \"" + name + "\"");
    return GlobalAction{build_group(it->second.group), it->second.dim, it->second.maps};
}

AlgebraKind Workspace::action_kind_for(const RawCovariant& entry) const {
    if (entry.action_kind) return *entry.action_kind;
    auto rit = partial_reps_.find(entry.lambda);
    if (rit == partial_reps_.end() || !rit->second.algebra)
        throw InputError("covariant entry references a rep without an algebra");
    if (auto k = declared_kind(*rit->second.algebra)) return *k;
    Algebra a = build_algebra(*rit->second.algebra);
    if (is_associative(a)) return AlgebraKind::associative;
    if (is_lie(a)) return AlgebraKind::lie;
    throw MathError("algebra \"" + *rit->second.algebra +
                    "\" is neither associative nor Lie; declare an action_kind");
}

CovariantRep Workspace::build_covariant(const std::string& name) const {
    auto it = covariant_.find(name);
    if (it == covariant_.end()) throw InputError("unknown covariant entry \"" + name + "\"");
    const RawCovariant& raw = it->second;
    if (raw.is_dilation())
        throw InputError("entry \"" + name + "\" is a dilation; use build_dilated");
    PartialRep lambda = build_partial_rep(raw.lambda);
    CovariantRep c;
    c.lambda = IdealPartialRep{lambda};
    c.action = ModuleAction{*lambda.algebra, action_kind_for(raw), raw.module_dim, raw.action};
    c.pi.group = lambda.group;
    c.pi.dim = raw.module_dim;
    c.pi.pi = raw.pi;
    c.pi.target_kind = TargetKind::module;
    return c;
}

DilatedRep Workspace::build_dilated(const std::string& name) const {
    auto it = covariant_.find(name);
    if (it == covariant_.end()) throw InputError("unknown covariant entry \"" + name + "\"");
    const RawCovariant& raw = it->second;
    if (!raw.is_dilation())
        throw InputError("entry \"" + name + "\" is not a dilation (missing T/rho)");
    PartialRep lambda = build_partial_rep(raw.lambda);
    LambdaSpace ls = build_lambda(lambda);
    return make_dilated(std::move(ls), action_kind_for(raw), raw.rho, raw.action, *raw.T);
}

DerivationAction Workspace::build_derivation_action(const std::string& name) const {
    auto it = derivation_actions_.find(name);
    if (it == derivation_actions_.end())
        throw InputError("unknown derivation action \"" + name + "\"");
    return DerivationAction{build_algebra(it->second.L), build_algebra(it->second.M),
                            it->second.act};
}

}  // namespace pglob
