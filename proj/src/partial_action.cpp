#include "pglob/partial_action.hpp"

#include <string>

namespace pglob {

std::string action_kind_name(ActionKind k) {
    switch (k) {
        case ActionKind::module: return "module";
        case ActionKind::ideal_algebra: return "ideal-algebra";
        case ActionKind::generalized_algebra: return "generalized-algebra";
    }
    return "?";
}

ActionKind action_kind_from_name(const std::string& name) {
    if (name == "module") return ActionKind::module;
    if (name == "ideal-algebra") return ActionKind::ideal_algebra;
    if (name == "generalized-algebra") return ActionKind::generalized_algebra;
    throw InputError("unknown partial action kind: '" + name + "'");
}

namespace {

void check_shapes(const PartialAction& pa) {
    const std::size_t n = pa.group.order();
    if (pa.domains.size() != n || pa.maps.size() != n)
        throw InputError("partial action needs one domain and one map per group element");
    for (const auto& d : pa.domains)
        if (d.ambient_dim() != pa.ambient_dim)
            throw InputError("partial action domain has wrong ambient dimension");
    for (const auto& m : pa.maps)
        if (m.rows() != pa.ambient_dim || m.cols() != pa.ambient_dim)
            throw InputError("partial action map has wrong shape");
    if (pa.kind != ActionKind::module) {
        if (!pa.algebra) throw InputError("algebra-kind partial action needs an algebra");
        if (pa.algebra->dim() != pa.ambient_dim)
            throw InputError("partial action algebra dimension mismatch");
    }
}

Subspace map_image(const Matrix& m, const Subspace& dom) {
    std::vector<Vec> gens;
    for (const auto& b : dom.basis()) gens.push_back(m.apply(b));
    return Subspace::span(m.rows(), gens);
}

}  // namespace

ValidationReport check_global_action(const GlobalAction& ga) {
    ValidationReport rep;
    const std::size_t n = ga.group.order();
    if (ga.maps.size() != n) throw InputError("global action needs one matrix per group element");
    for (const auto& m : ga.maps)
        if (m.rows() != ga.dim || m.cols() != ga.dim)
            throw InputError("global action matrix has wrong shape");

    rep.add("identity_map", ga.maps[ga.group.identity()].is_identity(),
            ga.maps[ga.group.identity()].is_identity() ? "" : "map at identity is not id");
    bool hom = true;
    std::string hw;
    for (std::size_t g = 0; g < n && hom; ++g)
        for (std::size_t h = 0; h < n && hom; ++h)
            if (ga.maps[g] * ga.maps[h] != ga.maps[ga.group.mul(g, h)]) {
                hom = false;
                hw = "map[g]·map[h] != map[gh] at (g, h) = (" + std::to_string(g) + ", " +
                     std::to_string(h) + ")";
            }
    rep.add("homomorphism", hom, hw);
    bool inv_ok = true;
    std::string iw;
    for (std::size_t g = 0; g < n && inv_ok; ++g)
        if (!invert(ga.maps[g])) {
            inv_ok = false;
            iw = "map[" + std::to_string(g) + "] is singular";
        }
    rep.add("invertible", inv_ok, iw);
    return rep;
}

ValidationReport check_partial_action(const PartialAction& pa) {
    check_shapes(pa);
    ValidationReport rep;
    const std::size_t n = pa.group.order();
    const std::size_t e = pa.group.identity();

    bool id_dom = pa.domains[e] == Subspace::full(pa.ambient_dim);
    rep.add("identity_domain_full", id_dom, id_dom ? "" : "X_1 != X");
    bool id_map = pa.maps[e].is_identity();
    rep.add("identity_map", id_map, id_map ? "" : "theta_1 != id");

    // Each θ_g maps X_{g⁻¹} bijectively onto X_g.
    {
        bool ok = true;
        std::string w;
        for (std::size_t g = 0; g < n && ok; ++g) {
            const Subspace& dom = pa.domains[pa.group.inv(g)];
            Subspace img = map_image(pa.maps[g], dom);
            if (img.dim() != dom.dim()) {
                ok = false;
                w = "theta_" + std::to_string(g) + " is not injective on its domain";
            } else if (img != pa.domains[g]) {
                ok = false;
                w = "theta_" + std::to_string(g) + "(X_g^-1) != X_g";
            }
        }
        rep.add("bijective_on_domains", ok, w);
    }

    // (ii) θ_g(X_{g⁻¹} ∩ X_{g⁻¹h}) ⊆ X_g ∩ X_h.
    {
        bool ok = true;
        std::string w;
        for (std::size_t g = 0; g < n && ok; ++g)
            for (std::size_t h = 0; h < n && ok; ++h) {
                Subspace src = subspace_intersect(pa.domains[pa.group.inv(g)],
                                                  pa.domains[pa.group.mul(pa.group.inv(g), h)]);
                Subspace dst = subspace_intersect(pa.domains[g], pa.domains[h]);
                for (const auto& b : src.basis())
                    if (!dst.contains(pa.maps[g].apply(b))) {
                        ok = false;
                        w = "condition (ii) fails at (g, h) = (" + std::to_string(g) + ", " +
                            std::to_string(h) + "), vector " + vec_str(b);
                        break;
                    }
            }
        rep.add("domain_compatibility", ok, w);
    }

    // (iii) θ_g θ_h = θ_{gh} on X_{h⁻¹} ∩ X_{h⁻¹g⁻¹}.
    {
        bool ok = true;
        std::string w;
        for (std::size_t g = 0; g < n && ok; ++g)
            for (std::size_t h = 0; h < n && ok; ++h) {
                Subspace src = subspace_intersect(
                    pa.domains[pa.group.inv(h)],
                    pa.domains[pa.group.mul(pa.group.inv(h), pa.group.inv(g))]);
                for (const auto& b : src.basis()) {
                    Vec lhs = pa.maps[g].apply(pa.maps[h].apply(b));
                    Vec rhs = pa.maps[pa.group.mul(g, h)].apply(b);
                    if (lhs != rhs) {
                        ok = false;
                        w = "composition fails at (g, h) = (" + std::to_string(g) + ", " +
                            std::to_string(h) + "), vector " + vec_str(b);
                        break;
                    }
                }
            }
        rep.add("composition", ok, w);
    }

    if (pa.kind != ActionKind::module) {
        const Algebra& A = *pa.algebra;
        bool closed = true;
        std::string cw;
        for (std::size_t g = 0; g < n && closed; ++g) {
            bool this_ok = pa.kind == ActionKind::ideal_algebra ? is_ideal(A, pa.domains[g])
                                                                : is_subalgebra(A, pa.domains[g]);
            if (!this_ok) {
                closed = false;
                cw = "domain of element " + std::to_string(g) +
                     (pa.kind == ActionKind::ideal_algebra ? " is not a bilateral ideal"
                                                           : " is not a subalgebra");
            }
        }
        rep.add(pa.kind == ActionKind::ideal_algebra ? "domains_are_ideals"
                                                     : "domains_are_subalgebras",
                closed, cw);

        bool mult = true;
        std::string mw;
        for (std::size_t g = 0; g < n && mult; ++g) {
            const Subspace& dom = pa.domains[pa.group.inv(g)];
            for (std::size_t i = 0; i < dom.dim() && mult; ++i)
                for (std::size_t j = 0; j < dom.dim() && mult; ++j) {
                    Vec prod = A.multiply(dom.basis()[i], dom.basis()[j]);
                    Vec lhs = pa.maps[g].apply(prod);
                    Vec rhs = A.multiply(pa.maps[g].apply(dom.basis()[i]),
                                         pa.maps[g].apply(dom.basis()[j]));
                    if (lhs != rhs) {
                        mult = false;
                        mw = "alpha_" + std::to_string(g) +
                             " is not multiplicative on its domain (basis pair " +
                             std::to_string(i) + ", " + std::to_string(j) + ")";
                    }
                }
        }
        rep.add("maps_multiplicative", mult, mw);
    }
    return rep;
}

PartialAction as_partial_action(const GlobalAction& ga, ActionKind kind,
                                std::optional<Algebra> algebra) {
    PartialAction pa;
    pa.group = ga.group;
    pa.ambient_dim = ga.dim;
    pa.domains.assign(ga.group.order(), Subspace::full(ga.dim));
    pa.maps = ga.maps;
    pa.kind = kind;
    pa.algebra = std::move(algebra);
    return pa;
}

PartialAction restrict_global(const GlobalAction& ga, const Subspace& s, RestrictRequire require,
                              std::optional<Algebra> algebra) {
    if (s.ambient_dim() != ga.dim) throw InputError("restriction subspace ambient mismatch");
    if (require != RestrictRequire::none) {
        if (!algebra) throw InputError("restriction closure check needs an algebra");
        bool closed = require == RestrictRequire::ideal ? is_ideal(*algebra, s)
                                                        : is_subalgebra(*algebra, s);
        if (!closed)
            throw MathError(std::string("NotClosed: subspace is not a ") +
                            (require == RestrictRequire::ideal ? "bilateral ideal" : "subalgebra"));
    }
    // The restriction lives on S itself: everything is re-expressed in S's
    // RREF coordinates so that the identity domain is the full space.
    SubspaceCoords sc = coords_of(s);
    const std::size_t k = s.dim();
    PartialAction pa;
    pa.group = ga.group;
    pa.ambient_dim = k;
    pa.kind = require == RestrictRequire::ideal        ? ActionKind::ideal_algebra
              : require == RestrictRequire::subalgebra ? ActionKind::generalized_algebra
                                                       : ActionKind::module;
    if (require != RestrictRequire::none) {
        std::vector<std::vector<Vec>> prods(k, std::vector<Vec>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                prods[i][j] = sc.sel.apply(algebra->multiply(s.basis()[i], s.basis()[j]));
        pa.algebra = Algebra(k, std::move(prods));
    }
    for (std::size_t g = 0; g < ga.group.order(); ++g) {
        Subspace gs = image(ga.maps[g] * sc.incl);
        Subspace dom = subspace_intersect(s, gs);
        std::vector<Vec> in_s;
        for (const auto& b : dom.basis()) in_s.push_back(sc.sel.apply(b));
        pa.domains.push_back(Subspace::span(k, in_s));
        pa.maps.push_back(sc.sel * ga.maps[g] * sc.incl);
    }
    return pa;
}

bool check_equivariant(const Matrix& phi, const PartialAction& src, const PartialAction& dst) {
    if (src.group != dst.group) throw InputError("equivariance needs matching groups");
    if (phi.cols() != src.ambient_dim || phi.rows() != dst.ambient_dim)
        throw InputError("equivariant map shape mismatch");
    const std::size_t n = src.group.order();
    for (std::size_t g = 0; g < n; ++g) {
        for (const auto& b : src.domains[g].basis())
            if (!dst.domains[g].contains(phi.apply(b))) return false;
        for (const auto& b : src.domains[src.group.inv(g)].basis()) {
            Vec lhs = phi.apply(src.maps[g].apply(b));
            Vec rhs = dst.maps[g].apply(phi.apply(b));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

}  // namespace pglob
