#include "pglob/covariant.hpp"

#include <string>

namespace pglob {

std::string algebra_kind_name(AlgebraKind k) {
    return k == AlgebraKind::associative ? "associative" : "lie";
}

AlgebraKind algebra_kind_from_name(const std::string& name) {
    if (name == "associative") return AlgebraKind::associative;
    if (name == "lie") return AlgebraKind::lie;
    throw InputError("unknown algebra kind: '" + name + "'");
}

Matrix ModuleAction::act_of(const Vec& x) const {
    if (x.size() != algebra.dim()) throw InputError("act_of: coordinate length mismatch");
    Matrix m(module_dim, module_dim);
    for (std::size_t k = 0; k < x.size(); ++k)
        if (!x[k].is_zero()) m = m + x[k] * act[k];
    return m;
}

ValidationReport check_module_action(const ModuleAction& ma) {
    ValidationReport out;
    if (ma.act.size() != ma.algebra.dim())
        throw InputError("module action needs one matrix per algebra basis element");
    for (const auto& m : ma.act)
        if (m.rows() != ma.module_dim || m.cols() != ma.module_dim)
            throw InputError("module action matrix has wrong shape");

    bool kind_ok = ma.kind == AlgebraKind::associative ? is_associative(ma.algebra)
                                                       : is_lie(ma.algebra);
    out.add("algebra_kind", kind_ok,
            kind_ok ? ""
                    : "algebra is not " + algebra_kind_name(ma.kind) +
                          " as the declared kind requires");

    bool law = true;
    std::string w;
    const std::size_t d = ma.algebra.dim();
    for (std::size_t i = 0; i < d && law; ++i)
        for (std::size_t j = 0; j < d && law; ++j) {
            Matrix lhs = ma.act_of(ma.algebra.basis_product(i, j));
            Matrix rhs = ma.kind == AlgebraKind::associative
                             ? ma.act[i] * ma.act[j]
                             : ma.act[i] * ma.act[j] - ma.act[j] * ma.act[i];
            if (lhs != rhs) {
                law = false;
                w = "module law fails on basis pair (" + std::to_string(i) + ", " +
                    std::to_string(j) + ")";
            }
        }
    out.add("module_law", law, w);
    return out;
}

ValidationReport check_covariant(const CovariantRep& c) {
    ValidationReport out;
    const PartialRep& lam = c.lambda.rep;
    if (c.pi.group != lam.group) throw InputError("covariant rep: group mismatch");
    if (c.pi.dim != c.action.module_dim) throw InputError("covariant rep: module dim mismatch");
    if (!(c.action.algebra == *lam.algebra))
        throw InputError("covariant rep: the action is over a different algebra");

    out.merge("lambda", check_partial_rep(lam));
    out.merge("lambda", check_ideal_condition(lam));
    out.merge("pi", check_partial_rep(c.pi));
    out.merge("action", check_module_action(c.action));

    const std::size_t n = lam.group.order();
    const std::size_t dA = lam.dim;

    // (1) π_g(x m) = λ_g(x) π_g(m).
    bool c1 = true;
    std::string w1;
    for (std::size_t g = 0; g < n && c1; ++g)
        for (std::size_t x = 0; x < dA && c1; ++x) {
            Matrix lhs = c.pi.pi[g] * c.action.act[x];
            Matrix rhs = c.action.act_of(lam.pi[g].apply(vec_unit(dA, x))) * c.pi.pi[g];
            if (lhs != rhs) {
                c1 = false;
                w1 = "condition (1) fails at g = " + std::to_string(g) + ", basis x" +
                     std::to_string(x + 1);
            }
        }
    out.add("condition_1", c1, w1);

    // (2) ε_g(x m) = e_g(x) m = x ε_g(m).
    bool c2 = true;
    std::string w2;
    for (std::size_t g = 0; g < n && c2; ++g) {
        Matrix eps = c.pi.epsilon(g);
        Matrix e = lam.epsilon(g);
        for (std::size_t x = 0; x < dA && c2; ++x) {
            Matrix lhs = eps * c.action.act[x];
            Matrix mid = c.action.act_of(e.apply(vec_unit(dA, x)));
            Matrix rhs = c.action.act[x] * eps;
            if (lhs != mid || mid != rhs) {
                c2 = false;
                w2 = "condition (2) fails at g = " + std::to_string(g) + ", basis x" +
                     std::to_string(x + 1);
            }
        }
    }
    out.add("condition_2", c2, w2);

    // Derived: λ_g(x) π_h(m) = π_g(x π_{g⁻¹h}(m)).
    bool rel = true;
    std::string wr;
    for (std::size_t g = 0; g < n && rel; ++g)
        for (std::size_t h = 0; h < n && rel; ++h) {
            const std::size_t gih = lam.group.mul(lam.group.inv(g), h);
            for (std::size_t x = 0; x < dA && rel; ++x) {
                Matrix lhs = c.action.act_of(lam.pi[g].apply(vec_unit(dA, x))) * c.pi.pi[h];
                Matrix rhs = c.pi.pi[g] * c.action.act[x] * c.pi.pi[gih];
                if (lhs != rhs) {
                    rel = false;
                    wr = "derived relation fails at (g, h) = (" + std::to_string(g) + ", " +
                         std::to_string(h) + "), basis x" + std::to_string(x + 1);
                }
            }
        }
    out.add("relation_pi_lambda", rel, wr);

    // Derived: λ_g(A)·M ⊆ π_g(M).
    bool img = true;
    std::string wi;
    for (std::size_t g = 0; g < n && img; ++g) {
        Subspace target = image(c.pi.pi[g]);
        Subspace acted = Subspace::zero(c.action.module_dim);
        for (std::size_t x = 0; x < dA; ++x)
            acted = subspace_sum(acted,
                                 image(c.action.act_of(lam.pi[g].apply(vec_unit(dA, x)))));
        if (!target.contains(acted)) {
            img = false;
            wi = "lambda_g(A)·M is not inside pi_g(M) at g = " + std::to_string(g);
        }
    }
    out.add("action_of_lambda_g", img, wi);
    return out;
}

Matrix DilatedRep::act_class(const Vec& z) const {
    if (z.size() != lambda_space.dim()) throw InputError("act_class: coordinate length mismatch");
    Matrix m(w_dim, w_dim);
    const auto& free = lambda_space.quotient().free_coords();
    const std::size_t d = lambda_space.block_dim();
    for (std::size_t u = 0; u < z.size(); ++u)
        if (!z[u].is_zero()) m = m + z[u] * act[free[u] / d][free[u] % d];
    return m;
}

Matrix DilatedRep::act_iota(const Vec& x) const {
    return act_class(lambda_space.iota().apply(x));
}

DilatedRep make_dilated(LambdaSpace lambda_space, AlgebraKind kind, std::vector<Matrix> rho,
                        std::vector<Matrix> act_on_A_basis, Matrix T) {
    if (!lambda_space.has_product())
        throw MathError("NotIdeal: dilations need Lambda over an ideal partial rep -- " +
                        lambda_space.product_refusal());
    const std::size_t n = lambda_space.group().order();
    const std::size_t d = lambda_space.block_dim();
    DilatedRep out;
    out.w_dim = T.rows();
    if (T.cols() != out.w_dim) throw InputError("T must be square");
    if (rho.size() != n) throw InputError("dilated rep needs one rho per group element");
    for (const auto& m : rho)
        if (m.rows() != out.w_dim || m.cols() != out.w_dim)
            throw InputError("rho matrix has wrong shape");
    if (act_on_A_basis.size() != d)
        throw InputError("dilated rep needs one action matrix per A-basis element");
    for (const auto& m : act_on_A_basis)
        if (m.rows() != out.w_dim || m.cols() != out.w_dim)
            throw InputError("action matrix has wrong shape");

    out.kind = kind;
    out.rho = std::move(rho);
    out.T = std::move(T);
    out.act.assign(n, std::vector<Matrix>(d));
    for (std::size_t g = 0; g < n; ++g) {
        const std::size_t gi = lambda_space.group().inv(g);
        for (std::size_t i = 0; i < d; ++i)
            out.act[g][i] = out.rho[g] * act_on_A_basis[i] * out.rho[gi];
    }
    out.lambda_space = std::move(lambda_space);
    return out;
}

ValidationReport check_dilated(const DilatedRep& d) {
    ValidationReport out;
    const LambdaSpace& L = d.lambda_space;
    const FiniteGroup& G = L.group();
    const std::size_t n = G.order();
    const std::size_t dA = L.block_dim();
    const Algebra& LA = L.product_algebra();

    bool rho_ok = d.rho[G.identity()].is_identity();
    std::string rw = rho_ok ? "" : "rho_1 != id";
    for (std::size_t g = 0; g < n && rho_ok; ++g)
        for (std::size_t h = 0; h < n && rho_ok; ++h)
            if (d.rho[g] * d.rho[h] != d.rho[G.mul(g, h)]) {
                rho_ok = false;
                rw = "rho is not a homomorphism at (" + std::to_string(g) + ", " +
                     std::to_string(h) + ")";
            }
    out.add("rho_global", rho_ok, rw);

    // The generator actions must descend to Λ(A).
    bool wd = true;
    std::string ww;
    for (const auto& r : L.quotient().relations().basis()) {
        Matrix acc(d.w_dim, d.w_dim);
        for (std::size_t k = 0; k < r.size(); ++k)
            if (!r[k].is_zero()) acc = acc + r[k] * d.act[k / dA][k % dA];
        if (!acc.is_zero()) {
            wd = false;
            ww = "generator actions do not kill the Lambda(A) relations";
            break;
        }
    }
    out.add("action_well_defined", wd, ww);

    bool law = true;
    std::string lw;
    if (wd) {
        for (std::size_t g = 0; g < n && law; ++g)
            for (std::size_t h = 0; h < n && law; ++h)
                for (std::size_t i = 0; i < dA && law; ++i)
                    for (std::size_t j = 0; j < dA && law; ++j) {
                        Vec prod = LA.multiply(L.class_of(g, vec_unit(dA, i)),
                                               L.class_of(h, vec_unit(dA, j)));
                        Matrix lhs = d.act_class(prod);
                        Matrix rhs = d.kind == AlgebraKind::associative
                                         ? d.act[g][i] * d.act[h][j]
                                         : d.act[g][i] * d.act[h][j] -
                                               d.act[h][j] * d.act[g][i];
                        if (lhs != rhs) {
                            law = false;
                            lw = "Lambda(A)-module law fails on generators (" +
                                 std::to_string(g) + ", " + std::to_string(i) + "), (" +
                                 std::to_string(h) + ", " + std::to_string(j) + ")";
                        }
                    }
    }
    out.add("module_law", law && wd, law ? "" : lw);

    // Covariance of (ρ, W): ρ_g(z w) = Θ_g(z) ρ_g(w).
    bool cov = true;
    std::string cw;
    for (std::size_t g = 0; g < n && cov; ++g)
        for (std::size_t h = 0; h < n && cov; ++h)
            for (std::size_t j = 0; j < dA && cov; ++j)
                if (d.act[G.mul(g, h)][j] * d.rho[g] != d.rho[g] * d.act[h][j]) {
                    cov = false;
                    cw = "covariance fails at g = " + std::to_string(g) + " on generator (" +
                         std::to_string(h) + ", " + std::to_string(j) + ")";
                }
    out.add("covariance", cov, cw);

    bool tmod = true;
    std::string tw;
    for (std::size_t g = 0; g < n && tmod; ++g)
        for (std::size_t i = 0; i < dA && tmod; ++i)
            if (d.T * d.act[g][i] != d.act[g][i] * d.T) {
                tmod = false;
                tw = "T does not commute with the action of generator (" + std::to_string(g) +
                     ", " + std::to_string(i) + ")";
            }
    out.add("T_module_map", tmod, tw);

    bool idem = d.T * d.T == d.T;
    out.add("T_idempotent", idem, idem ? "" : "T^2 != T");

    // xw = T(xw) = x T(w).
    bool xw = true;
    std::string xww;
    const std::size_t e = G.identity();
    for (std::size_t i = 0; i < dA && xw; ++i) {
        const Matrix& ax = d.act[e][i];
        if (d.T * ax != ax || ax * d.T != ax) {
            xw = false;
            xww = "xw = T(xw) = xT(w) fails for basis x" + std::to_string(i + 1);
        }
    }
    out.add("condition_2_xw", xw, xww);

    // ⌊g, x⌋u = λ_g(x)u on T(W).
    bool c3 = true;
    std::string w3;
    const PartialRep& lam = L.rep();
    for (std::size_t g = 0; g < n && c3; ++g)
        for (std::size_t i = 0; i < dA && c3; ++i) {
            Matrix viaiota(d.w_dim, d.w_dim);
            Vec lx = lam.pi[g].apply(vec_unit(dA, i));
            for (std::size_t k = 0; k < dA; ++k)
                if (!lx[k].is_zero()) viaiota = viaiota + lx[k] * d.act[e][k];
            if ((d.act[g][i] - viaiota) * d.T != Matrix(d.w_dim, d.w_dim)) {
                c3 = false;
                w3 = "condition (3) fails on generator (" + std::to_string(g) + ", " +
                     std::to_string(i) + ")";
            }
        }
    out.add("condition_3", c3, w3);

    bool c4 = true;
    std::string w4;
    for (std::size_t g = 0; g < n && c4; ++g) {
        const std::size_t gi = G.inv(g);
        if (d.rho[g] * d.T * d.rho[gi] * d.T != d.T * d.rho[g] * d.T * d.rho[gi]) {
            c4 = false;
            w4 = "condition (4) fails at g = " + std::to_string(g);
        }
    }
    out.add("condition_4", c4, w4);
    return out;
}

LiftResult lift_to_lambda(const CovariantRep& c) {
    auto valid = check_covariant(c);
    if (!valid.overall())
        throw MathError("InvalidCovariant: covariant axioms fail:\n" + valid.summary());

    const PartialRep& lam = c.lambda.rep;
    const FiniteGroup& G = lam.group;
    const std::size_t n = G.order();
    const std::size_t dA = lam.dim;
    const std::size_t dM = c.action.module_dim;

    LambdaSpace LA = build_lambda(c.lambda);
    LambdaSpace LM = build_lambda(c.pi);
    const std::size_t qM = LM.dim();

    DilatedRep d;
    d.kind = c.action.kind;
    d.w_dim = qM;
    for (std::size_t g = 0; g < n; ++g) d.rho.push_back(LM.theta(g));

    // Action of the generating class ⌊g, x⌋ on Λ(M):
    // ⌊g, x⌋⌊h, m⌋ = ⌊g, x·π_{g⁻¹h}(m)⌋, lowered through Λ(M).
    d.act.assign(n, std::vector<Matrix>(dA));
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t i = 0; i < dA; ++i) {
            Matrix amb(qM, n * dM);
            for (std::size_t h = 0; h < n; ++h) {
                const std::size_t gih = G.mul(G.inv(g), h);
                for (std::size_t j = 0; j < dM; ++j) {
                    Vec moved = c.pi.pi[gih].apply(vec_unit(dM, j));
                    Vec cls = LM.class_of(g, c.action.act[i].apply(moved));
                    for (std::size_t r = 0; r < qM; ++r) amb(r, h * dM + j) = cls[r];
                }
            }
            auto lowered = LM.quotient().try_lower(amb);
            if (!lowered)
                throw MathError("internal: lifted action not single-valued on Lambda(M)");
            d.act[g][i] = std::move(*lowered);
        }
    // Second lowering phase: the family must kill the Λ(A) relations.
    for (const auto& r : LA.quotient().relations().basis()) {
        Matrix acc(qM, qM);
        for (std::size_t k = 0; k < r.size(); ++k)
            if (!r[k].is_zero()) acc = acc + r[k] * d.act[k / dA][k % dA];
        if (!acc.is_zero())
            throw MathError("internal: lifted action not single-valued on Lambda(A)");
    }

    // Analogue identity ⌊g, x⌋⌊h, m⌋ = ⌊h, λ_{h⁻¹g}(x)·m⌋ on generators.
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t i = 0; i < dA; ++i)
            for (std::size_t h = 0; h < n; ++h) {
                const std::size_t hig = G.mul(G.inv(h), g);
                for (std::size_t j = 0; j < dM; ++j) {
                    Vec lhs = d.act[g][i].apply(LM.class_of(h, vec_unit(dM, j)));
                    Vec moved = c.action.act_of(lam.pi[hig].apply(vec_unit(dA, i)))
                                    .apply(vec_unit(dM, j));
                    if (lhs != LM.class_of(h, moved))
                        throw MathError("internal: analogue identity fails on generators");
                }
            }

    // T_Λ⌊h, m⌋ = ⌊1, π_h(m)⌋.
    Matrix t_amb(qM, n * dM);
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t j = 0; j < dM; ++j) {
            Vec cls = LM.class_of(G.identity(), c.pi.pi[h].apply(vec_unit(dM, j)));
            for (std::size_t r = 0; r < qM; ++r) t_amb(r, h * dM + j) = cls[r];
        }
    auto t = LM.quotient().try_lower(t_amb);
    if (!t) throw MathError("internal: T does not descend to Lambda(M)");
    d.T = std::move(*t);

    d.lambda_space = std::move(LA);
    return {std::move(d), std::move(LM)};
}

namespace {

std::vector<Matrix> solve_intertwiners(std::size_t dst_dim, std::size_t src_dim,
                                       const std::vector<std::pair<Matrix, Matrix>>& pairs) {
    // Unknown Z (dst×src) with Z·S = D·Z for each pair (S, D).
    LinearSystem sys(dst_dim * src_dim);
    for (const auto& [s, dmat] : pairs) {
        for (std::size_t r = 0; r < dst_dim; ++r)
            for (std::size_t col = 0; col < src_dim; ++col) {
                Vec row(dst_dim * src_dim);
                for (std::size_t j = 0; j < src_dim; ++j) row[r * src_dim + j] += s(j, col);
                for (std::size_t j = 0; j < dst_dim; ++j) row[j * src_dim + col] -= dmat(r, j);
                sys.add_equation(std::move(row), Rational(0));
            }
    }
    auto sol = sys.solve();
    std::vector<Matrix> basis;
    for (const auto& v : sol.kernel_basis) {
        Matrix z(dst_dim, src_dim);
        for (std::size_t r = 0; r < dst_dim; ++r)
            for (std::size_t c = 0; c < src_dim; ++c) z(r, c) = v[r * src_dim + c];
        basis.push_back(std::move(z));
    }
    return basis;
}

bool satisfies_intertwining(const Matrix& z,
                            const std::vector<std::pair<Matrix, Matrix>>& pairs) {
    for (const auto& [s, dmat] : pairs)
        if (z * s != dmat * z) return false;
    return true;
}

std::vector<std::pair<Matrix, Matrix>> covariant_constraints(const CovariantRep& src,
                                                             const CovariantRep& dst) {
    std::vector<std::pair<Matrix, Matrix>> pairs;
    for (std::size_t g = 0; g < src.pi.group.order(); ++g)
        pairs.emplace_back(src.pi.pi[g], dst.pi.pi[g]);
    for (std::size_t i = 0; i < src.action.algebra.dim(); ++i)
        pairs.emplace_back(src.action.act[i], dst.action.act[i]);
    return pairs;
}

std::vector<std::pair<Matrix, Matrix>> dilated_constraints(const DilatedRep& src,
                                                           const DilatedRep& dst) {
    std::vector<std::pair<Matrix, Matrix>> pairs;
    const std::size_t n = src.lambda_space.group().order();
    const std::size_t dA = src.lambda_space.block_dim();
    for (std::size_t g = 0; g < n; ++g) pairs.emplace_back(src.rho[g], dst.rho[g]);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t i = 0; i < dA; ++i) pairs.emplace_back(src.act[g][i], dst.act[g][i]);
    pairs.emplace_back(src.T, dst.T);
    return pairs;
}

}  // namespace

CovariantRep functor_F(const DilatedRep& d) {
    auto valid = check_dilated(d);
    if (!valid.overall())
        throw MathError("InvalidDilation: dilation axioms fail:\n" + valid.summary());

    const FiniteGroup& G = d.lambda_space.group();
    const std::size_t n = G.order();
    const std::size_t dA = d.lambda_space.block_dim();
    const std::size_t e = G.identity();

    SubspaceCoords tw = coords_of(image(d.T));

    CovariantRep out;
    out.lambda = IdealPartialRep{d.lambda_space.rep()};
    out.action.algebra = *d.lambda_space.rep().algebra;
    out.action.kind = d.kind;
    out.action.module_dim = tw.space.dim();
    for (std::size_t i = 0; i < dA; ++i)
        out.action.act.push_back(restrict_to(d.act[e][i], tw));

    out.pi.group = G;
    out.pi.dim = tw.space.dim();
    out.pi.target_kind = TargetKind::module;
    for (std::size_t g = 0; g < n; ++g)
        out.pi.pi.push_back(restrict_to(d.T * d.rho[g], tw));

    // ρ_g(λ_{g⁻¹}(x)u) = x ρ_g(u) for u ∈ T(W).
    const PartialRep& lam = d.lambda_space.rep();
    for (std::size_t g = 0; g < n; ++g) {
        const std::size_t gi = G.inv(g);
        for (std::size_t i = 0; i < dA; ++i) {
            Matrix lhs = d.rho[g] * d.act_iota(lam.pi[gi].apply(vec_unit(dA, i))) * d.T;
            Matrix rhs = d.act[e][i] * d.rho[g] * d.T;
            if (lhs != rhs) throw MathError("internal: relation rho fails in functor_F");
        }
    }
    return out;
}

std::vector<Matrix> hom_space(const CovariantRep& src, const CovariantRep& dst) {
    if (!(src.lambda.rep == dst.lambda.rep))
        throw InputError("hom space needs the same lambda on both sides");
    return solve_intertwiners(dst.action.module_dim, src.action.module_dim,
                              covariant_constraints(src, dst));
}

std::vector<Matrix> hom_space(const DilatedRep& src, const DilatedRep& dst) {
    if (!(src.lambda_space.rep() == dst.lambda_space.rep()))
        throw InputError("hom space needs the same lambda on both sides");
    return solve_intertwiners(dst.w_dim, src.w_dim, dilated_constraints(src, dst));
}

AdjunctionResult check_adjunction(const CovariantRep& c, const DilatedRep& d) {
    AdjunctionResult res;
    auto cv = check_covariant(c);
    auto dv = check_dilated(d);
    res.checks.add("covariant_valid", cv.overall(), cv.overall() ? "" : cv.summary());
    res.checks.add("dilated_valid", dv.overall(), dv.overall() ? "" : dv.summary());
    if (!cv.overall() || !dv.overall()) return res;
    if (!(c.lambda.rep == d.lambda_space.rep()))
        throw InputError("adjunction needs the same lambda on both sides");

    LiftResult lift = lift_to_lambda(c);
    const LambdaSpace& LM = lift.module_lambda;
    const FiniteGroup& G = c.pi.group;
    const std::size_t n = G.order();
    const std::size_t dM = c.action.module_dim;
    const std::size_t qM = LM.dim();

    auto h1 = hom_space(lift.dilated, d);
    CovariantRep fd = functor_F(d);
    auto h2 = hom_space(c, fd);
    res.dim_hom_dilated = h1.size();
    res.dim_hom_covariant = h2.size();
    res.checks.add("hom_dims_equal", h1.size() == h2.size(),
                   h1.size() == h2.size()
                       ? ""
                       : "dim Hom(Lambda(c), d) = " + std::to_string(h1.size()) +
                             " but dim Hom(c, F(d)) = " + std::to_string(h2.size()));

    SubspaceCoords tw = coords_of(image(d.T));
    Matrix iota_m = LM.iota();

    // η(γ) = γ∘ι in T(W) coordinates.
    auto eta = [&](const Matrix& gamma) {
        return tw.sel * (gamma * iota_m);
    };
    // δ(ψ)⌊h, m⌋ = ρ_h ψ(m), lowered through Λ(M).
    auto delta = [&](const Matrix& psi) {
        Matrix amb(d.w_dim, n * dM);
        Matrix into_w = tw.incl * psi;
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t j = 0; j < dM; ++j) {
                Vec col = d.rho[h].apply(into_w.col(j));
                for (std::size_t r = 0; r < d.w_dim; ++r) amb(r, h * dM + j) = col[r];
            }
        auto lowered = LM.quotient().try_lower(amb);
        if (!lowered) throw MathError("internal: delta(psi) does not descend to Lambda(M)");
        return *lowered;
    };

    bool lands = true;
    std::string lw;
    auto cov_pairs = covariant_constraints(c, fd);
    for (std::size_t k = 0; k < h1.size() && lands; ++k) {
        Matrix gi = h1[k] * iota_m;
        if (d.T * gi != gi) {
            lands = false;
            lw = "eta(gamma_" + std::to_string(k) + ") does not land in T(W)";
        } else if (!satisfies_intertwining(eta(h1[k]), cov_pairs)) {
            lands = false;
            lw = "eta(gamma_" + std::to_string(k) + ") is not a covariant morphism";
        }
    }
    res.checks.add("eta_well_defined", lands, lw);

    bool delta_ok = true;
    std::string dw;
    auto dil_pairs = dilated_constraints(lift.dilated, d);
    for (std::size_t k = 0; k < h2.size() && delta_ok; ++k)
        if (!satisfies_intertwining(delta(h2[k]), dil_pairs)) {
            delta_ok = false;
            dw = "delta(psi_" + std::to_string(k) + ") is not a dilated morphism";
        }
    res.checks.add("delta_well_defined", delta_ok, dw);

    bool inv1 = true;
    std::string w1;
    for (std::size_t k = 0; k < h1.size() && inv1; ++k)
        if (delta(eta(h1[k])) != h1[k]) {
            inv1 = false;
            w1 = "delta∘eta != id on basis morphism " + std::to_string(k);
        }
    res.checks.add("delta_eta_identity", inv1, w1);

    bool inv2 = true;
    std::string w2;
    for (std::size_t k = 0; k < h2.size() && inv2; ++k)
        if (eta(delta(h2[k])) != h2[k]) {
            inv2 = false;
            w2 = "eta∘delta != id on basis morphism " + std::to_string(k);
        }
    res.checks.add("eta_delta_identity", inv2, w2);

    // Naturality in the covariant argument: η(φ∘Λ(γ)) = η(φ)∘γ for
    // endomorphisms γ of c.
    bool nat1 = true;
    std::string nw1;
    auto endo_c = hom_space(c, c);
    for (const auto& gamma : endo_c) {
        Matrix amb(qM, n * dM);
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t j = 0; j < dM; ++j) {
                Vec col = LM.class_of(h, gamma.col(j));
                for (std::size_t r = 0; r < qM; ++r) amb(r, h * dM + j) = col[r];
            }
        auto lifted = LM.quotient().try_lower(amb);
        if (!lifted) {
            nat1 = false;
            nw1 = "Lambda(gamma) does not descend";
            break;
        }
        for (const auto& phi : h1)
            if (eta(phi * *lifted) != eta(phi) * gamma) {
                nat1 = false;
                nw1 = "first naturality square fails";
                break;
            }
        if (!nat1) break;
    }
    res.checks.add("naturality_covariant", nat1, nw1);

    // Naturality in the dilated argument: η(ψ∘φ) = 𝓕(ψ)∘η(φ) for
    // endomorphisms ψ of d.
    bool nat2 = true;
    std::string nw2;
    auto endo_d = hom_space(d, d);
    for (const auto& psi : endo_d) {
        Matrix fpsi = restrict_to(psi, tw);
        for (const auto& phi : h1)
            if (eta(psi * phi) != fpsi * eta(phi)) {
                nat2 = false;
                nw2 = "second naturality square fails";
                break;
            }
        if (!nat2) break;
    }
    res.checks.add("naturality_dilated", nat2, nw2);
    return res;
}

}  // namespace pglob
