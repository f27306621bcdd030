#include "pglob/partial_rep.hpp"

#include <string>

namespace pglob {

namespace {

void check_shapes(const PartialRep& rep) {
    if (rep.pi.size() != rep.group.order())
        throw InputError("partial rep needs one matrix per group element");
    for (const auto& m : rep.pi)
        if (m.rows() != rep.dim || m.cols() != rep.dim)
            throw InputError("partial rep matrix has wrong shape");
    if (rep.target_kind == TargetKind::algebra) {
        if (!rep.algebra) throw InputError("algebra-target partial rep needs an algebra");
        if (rep.algebra->dim() != rep.dim)
            throw InputError("partial rep algebra dimension mismatch");
    }
}

}  // namespace

ValidationReport check_partial_rep(const PartialRep& rep) {
    check_shapes(rep);
    ValidationReport out;
    const std::size_t n = rep.group.order();
    const std::size_t e = rep.group.identity();

    bool id_ok = rep.pi[e].is_identity();
    out.add("identity", id_ok, id_ok ? "" : "pi_1 != id");

    bool ii = true;
    std::string iiw;
    for (std::size_t g = 0; g < n && ii; ++g)
        for (std::size_t h = 0; h < n && ii; ++h) {
            const std::size_t gi = rep.group.inv(g);
            if (rep.pi[gi] * rep.pi[g] * rep.pi[h] != rep.pi[gi] * rep.pi[rep.group.mul(g, h)]) {
                ii = false;
                iiw = "axiom (ii) fails at (g, h) = (" + std::to_string(g) + ", " +
                      std::to_string(h) + ")";
            }
        }
    out.add("axiom_ii", ii, iiw);

    bool iii = true;
    std::string iiiw;
    for (std::size_t g = 0; g < n && iii; ++g)
        for (std::size_t h = 0; h < n && iii; ++h) {
            const std::size_t hi = rep.group.inv(h);
            if (rep.pi[g] * rep.pi[h] * rep.pi[hi] != rep.pi[rep.group.mul(g, h)] * rep.pi[hi]) {
                iii = false;
                iiiw = "axiom (iii) fails at (g, h) = (" + std::to_string(g) + ", " +
                       std::to_string(h) + ")";
            }
        }
    out.add("axiom_iii", iii, iiiw);

    if (rep.target_kind == TargetKind::algebra) {
        bool mult = true;
        std::string mw;
        for (std::size_t g = 0; g < n && mult; ++g)
            if (!is_multiplicative(*rep.algebra, rep.pi[g])) {
                mult = false;
                mw = "pi_" + std::to_string(g) + " is not an algebra endomorphism";
            }
        out.add("multiplicative", mult, mw);
    }
    return out;
}

bool is_global_rep(const PartialRep& rep) {
    for (std::size_t g = 0; g < rep.group.order(); ++g)
        if (!rep.epsilon(g).is_identity()) return false;
    return true;
}

ValidationReport check_ideal_condition(const PartialRep& rep) {
    check_shapes(rep);
    if (rep.target_kind != TargetKind::algebra)
        throw InputError("ideal condition applies to algebra-target reps");
    const Algebra& A = *rep.algebra;
    ValidationReport out;
    const std::size_t n = rep.group.order();
    const std::size_t d = rep.dim;

    bool ideals = true;
    std::string iw;
    for (std::size_t g = 0; g < n && ideals; ++g)
        if (!is_ideal(A, image(rep.pi[g]))) {
            ideals = false;
            iw = "im pi_" + std::to_string(g) + " is not a bilateral ideal";
        }
    out.add("images_are_ideals", ideals, iw);

    // Redundant consistency check: pi_g(a)·pi_h(b) = pi_g(a·pi_{g⁻¹h}(b)).
    bool rel = true;
    std::string rw;
    for (std::size_t g = 0; g < n && rel; ++g)
        for (std::size_t h = 0; h < n && rel; ++h) {
            const std::size_t gih = rep.group.mul(rep.group.inv(g), h);
            for (std::size_t a = 0; a < d && rel; ++a)
                for (std::size_t b = 0; b < d && rel; ++b) {
                    Vec ea = vec_unit(d, a), eb = vec_unit(d, b);
                    Vec lhs = A.multiply(rep.pi[g].apply(ea), rep.pi[h].apply(eb));
                    Vec rhs = rep.pi[g].apply(A.multiply(ea, rep.pi[gih].apply(eb)));
                    if (lhs != rhs) {
                        rel = false;
                        rw = "product relation fails at g=" + std::to_string(g) +
                             ", h=" + std::to_string(h) + ", basis pair (" + std::to_string(a) +
                             ", " + std::to_string(b) + ")";
                    }
                }
        }
    out.add("product_relation", rel, rw);
    return out;
}

IdealPartialRep make_ideal_partial_rep(PartialRep rep) {
    auto axioms = check_partial_rep(rep);
    if (!axioms.overall())
        throw MathError("InvalidRep: partial representation axioms fail:\n" + axioms.summary());
    auto ideal = check_ideal_condition(rep);
    if (!ideal.overall())
        throw MathError("NotIdeal: ideal condition fails:\n" + ideal.summary());
    return IdealPartialRep{std::move(rep)};
}

PartialAction induced_partial_action(const PartialRep& rep) {
    auto axioms = check_partial_rep(rep);
    if (!axioms.overall())
        throw MathError("InvalidRep: cannot induce a partial action:\n" + axioms.summary());
    PartialAction pa;
    pa.group = rep.group;
    pa.ambient_dim = rep.dim;
    pa.maps = rep.pi;
    for (std::size_t g = 0; g < rep.group.order(); ++g) pa.domains.push_back(image(rep.pi[g]));
    if (rep.target_kind == TargetKind::algebra) {
        pa.algebra = rep.algebra;
        pa.kind = check_ideal_condition(rep).overall() ? ActionKind::ideal_algebra
                                                       : ActionKind::generalized_algebra;
    } else {
        pa.kind = ActionKind::module;
    }
    return pa;
}

IdealPartialRep rep_from_unital_action(const PartialAction& action) {
    if (action.kind != ActionKind::ideal_algebra || !action.algebra)
        throw InputError("unital correspondence needs an ideal-algebra partial action");
    const Algebra& A = *action.algebra;
    if (!is_associative(A)) throw MathError("unital correspondence needs an associative algebra");
    if (!A.unit()) throw MathError("unital correspondence needs a unital algebra");
    auto action_report = check_partial_action(action);
    if (!action_report.overall())
        throw MathError("invalid partial action:\n" + action_report.summary());

    const std::size_t n = action.group.order();
    const std::size_t d = action.ambient_dim;

    // Local unit of each domain ideal, as an exact solve inside the domain.
    std::vector<Vec> units;
    for (std::size_t g = 0; g < n; ++g) {
        const Subspace& dom = action.domains[g];
        const std::size_t k = dom.dim();
        LinearSystem sys(k);
        for (std::size_t j = 0; j < k; ++j) {
            const Vec& bj = dom.basis()[j];
            for (std::size_t coord = 0; coord < d; ++coord) {
                Vec left(k), right(k);
                for (std::size_t t = 0; t < k; ++t) {
                    left[t] = A.multiply(dom.basis()[t], bj)[coord];
                    right[t] = A.multiply(bj, dom.basis()[t])[coord];
                }
                sys.add_equation(std::move(left), bj[coord]);
                sys.add_equation(std::move(right), bj[coord]);
            }
        }
        auto sol = sys.solve();
        if (!sol.particular)
            throw MathError("NoLocalUnit(" + std::to_string(g) + "): the ideal A_" +
                            std::to_string(g) + " is not unital");
        Vec unit = vec_zero(d);
        for (std::size_t t = 0; t < k; ++t)
            unit = vec_add(unit, vec_scale((*sol.particular)[t], dom.basis()[t]));
        units.push_back(std::move(unit));
    }

    PartialRep rep;
    rep.group = action.group;
    rep.dim = d;
    rep.target_kind = TargetKind::algebra;
    rep.algebra = A;
    for (std::size_t g = 0; g < n; ++g) {
        const Vec& u = units[action.group.inv(g)];
        rep.pi.push_back(action.maps[g] * A.left_mult(u));
    }
    return make_ideal_partial_rep(std::move(rep));
}

}  // namespace pglob
