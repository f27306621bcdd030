#include "pglob/semidirect.hpp"

#include <string>

namespace pglob {

namespace {

Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

Vec stack_vec(const Vec& a, const Vec& b) {
    Vec r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

}  // namespace

Matrix DerivationAction::act_of(const Vec& x) const {
    if (x.size() != L.dim()) throw InputError("derivation act_of: coordinate mismatch");
    Matrix m(M.dim(), M.dim());
    for (std::size_t k = 0; k < x.size(); ++k)
        if (!x[k].is_zero()) m = m + x[k] * act[k];
    return m;
}

ValidationReport check_derivation_action(const DerivationAction& da) {
    if (da.act.size() != da.L.dim())
        throw InputError("derivation action needs one matrix per L-basis element");
    for (const auto& m : da.act)
        if (m.rows() != da.M.dim() || m.cols() != da.M.dim())
            throw InputError("derivation action matrix has wrong shape");

    ValidationReport out;
    bool l_lie = is_lie(da.L);
    out.add("L_is_lie", l_lie, l_lie ? "" : "L fails the Lie axioms");
    bool m_lie = is_lie(da.M);
    out.add("M_is_lie", m_lie, m_lie ? "" : "M fails the Lie axioms");

    const std::size_t dL = da.L.dim(), dM = da.M.dim();
    bool module = true;
    std::string mw;
    for (std::size_t i = 0; i < dL && module; ++i)
        for (std::size_t j = 0; j < dL && module; ++j) {
            Matrix lhs = da.act_of(da.L.basis_product(i, j));
            Matrix rhs = da.act[i] * da.act[j] - da.act[j] * da.act[i];
            if (lhs != rhs) {
                module = false;
                mw = "module law fails on L-basis pair (" + std::to_string(i) + ", " +
                     std::to_string(j) + ")";
            }
        }
    out.add("module_law", module, mw);

    bool deriv = true;
    std::string dw;
    for (std::size_t x = 0; x < dL && deriv; ++x)
        for (std::size_t m = 0; m < dM && deriv; ++m)
            for (std::size_t n = 0; n < dM && deriv; ++n) {
                Vec lhs = da.act[x].apply(da.M.basis_product(m, n));
                Vec rhs = vec_add(
                    da.M.multiply(da.act[x].apply(vec_unit(dM, m)), vec_unit(dM, n)),
                    da.M.multiply(vec_unit(dM, m), da.act[x].apply(vec_unit(dM, n))));
                if (lhs != rhs) {
                    deriv = false;
                    dw = "derivation law fails at (x, m, n) = (" + std::to_string(x) + ", " +
                         std::to_string(m) + ", " + std::to_string(n) + ")";
                }
            }
    out.add("derivation_law", deriv, dw);
    return out;
}

SemidirectProduct semidirect_product(const DerivationAction& da) {
    auto rep = check_derivation_action(da);
    if (!rep.overall())
        throw MathError("InvalidAction: derivation action fails:\n" + rep.summary());

    const std::size_t dL = da.L.dim(), dM = da.M.dim(), d = dL + dM;
    std::vector<std::vector<Vec>> sc(d, std::vector<Vec>(d, vec_zero(d)));
    auto put = [&](std::size_t i, std::size_t j, const Vec& lpart, const Vec& mpart) {
        for (std::size_t k = 0; k < dL; ++k) sc[i][j][k] = lpart[k];
        for (std::size_t k = 0; k < dM; ++k) sc[i][j][dL + k] = mpart[k];
    };
    for (std::size_t i = 0; i < dL; ++i)
        for (std::size_t j = 0; j < dL; ++j)
            put(i, j, da.L.basis_product(i, j), vec_zero(dM));
    for (std::size_t i = 0; i < dL; ++i)
        for (std::size_t j = 0; j < dM; ++j) {
            put(i, dL + j, vec_zero(dL), da.act[i].apply(vec_unit(dM, j)));
            put(dL + j, i, vec_zero(dL),
                vec_scale(Rational(-1), da.act[i].apply(vec_unit(dM, j))));
        }
    for (std::size_t i = 0; i < dM; ++i)
        for (std::size_t j = 0; j < dM; ++j)
            put(dL + i, dL + j, vec_zero(dL), da.M.basis_product(i, j));

    SemidirectProduct sp{da, Algebra(d, std::move(sc))};
    if (!is_lie(sp.algebra))
        throw MathError("internal: semidirect product is not a Lie algebra");
    return sp;
}

IdealPartialRep product_partial_rep(const IdealPartialRep& lambda, const IdealPartialRep& pi,
                                    const DerivationAction& da) {
    if (lambda.rep.group != pi.rep.group) throw InputError("product rep: group mismatch");
    if (!(*lambda.rep.algebra == da.L) || !(*pi.rep.algebra == da.M))
        throw InputError("product rep: algebras do not match the derivation action");

    CovariantRep cov{lambda,
                     ModuleAction{da.L, AlgebraKind::lie, da.M.dim(), da.act},
                     pi.rep};
    auto cv = check_covariant(cov);
    if (!cv.overall())
        throw MathError("NotCovariant: (pi, M) is not a covariant representation of lambda:\n" +
                        cv.summary());

    SemidirectProduct sp = semidirect_product(da);
    const FiniteGroup& G = lambda.rep.group;
    const std::size_t n = G.order();
    const std::size_t dL = da.L.dim(), dM = da.M.dim();

    PartialRep rep;
    rep.group = G;
    rep.dim = dL + dM;
    rep.target_kind = TargetKind::algebra;
    rep.algebra = sp.algebra;
    for (std::size_t g = 0; g < n; ++g)
        rep.pi.push_back(block_diag(lambda.rep.pi[g], pi.rep.pi[g]));

    // The ideal-proof step: ε_g(xn − ym) = xn − ym for x ∈ im λ_g, m ∈ im π_g.
    for (std::size_t g = 0; g < n; ++g) {
        Matrix eps = pi.rep.epsilon(g);
        Subspace iml = image(lambda.rep.pi[g]);
        for (const auto& x : iml.basis())
            for (std::size_t nn = 0; nn < dM; ++nn) {
                Vec xn = da.act_of(x).apply(vec_unit(dM, nn));
                if (eps.apply(xn) != xn)
                    throw MathError("internal: epsilon_g(xn) != xn in the ideal step");
            }
        Subspace imp = image(pi.rep.pi[g]);
        for (std::size_t y = 0; y < dL; ++y)
            for (const auto& m : imp.basis()) {
                Vec ym = da.act[y].apply(m);
                if (eps.apply(ym) != ym)
                    throw MathError("internal: epsilon_g(ym) != ym in the ideal step");
            }
    }
    return make_ideal_partial_rep(std::move(rep));
}

SemidirectIso check_semidirect_iso(const IdealPartialRep& lambda, const IdealPartialRep& pi,
                                   const DerivationAction& da) {
    IdealPartialRep sd = product_partial_rep(lambda, pi, da);
    const FiniteGroup& G = lambda.rep.group;
    const std::size_t n = G.order();
    const std::size_t dL = da.L.dim(), dM = da.M.dim(), dS = dL + dM;

    LambdaSpace LL = build_lambda(lambda);
    LambdaSpace LM = build_lambda(pi);
    const std::size_t qL = LL.dim(), qM = LM.dim();

    // The lifted action of Λ(L) on Λ(M): generators ⌊g, e_i⌋ act by
    // ⌊h, m⌋ ↦ ⌊g, e_i·π_{g⁻¹h}(m)⌋, lowered through Λ(M) and checked
    // against the Λ(L) relations.
    std::vector<std::vector<Matrix>> gen_act(n, std::vector<Matrix>(dL));
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t i = 0; i < dL; ++i) {
            Matrix amb(qM, n * dM);
            for (std::size_t h = 0; h < n; ++h) {
                const std::size_t gih = G.mul(G.inv(g), h);
                for (std::size_t j = 0; j < dM; ++j) {
                    Vec moved = pi.rep.pi[gih].apply(vec_unit(dM, j));
                    Vec cls = LM.class_of(g, da.act[i].apply(moved));
                    for (std::size_t r = 0; r < qM; ++r) amb(r, h * dM + j) = cls[r];
                }
            }
            auto lowered = LM.quotient().try_lower(amb);
            if (!lowered)
                throw MathError("PrerequisiteFailed: lifted action not single-valued on "
                                "Lambda(M)");
            gen_act[g][i] = std::move(*lowered);
        }
    for (const auto& r : LL.quotient().relations().basis()) {
        Matrix acc(qM, qM);
        for (std::size_t k = 0; k < r.size(); ++k)
            if (!r[k].is_zero()) acc = acc + r[k] * gen_act[k / dL][k % dL];
        if (!acc.is_zero())
            throw MathError("PrerequisiteFailed: lifted action not single-valued on Lambda(L)");
    }
    std::vector<Matrix> lifted_act;
    for (std::size_t u = 0; u < qL; ++u) {
        const std::size_t f = LL.quotient().free_coords()[u];
        lifted_act.push_back(gen_act[f / dL][f % dL]);
    }
    DerivationAction lifted{LL.product_algebra(), LM.product_algebra(), lifted_act};
    auto lifted_rep = check_derivation_action(lifted);
    if (!lifted_rep.overall())
        throw MathError("PrerequisiteFailed: the lifted action of Lambda(L) on Lambda(M) is "
                        "not an action by derivations:\n" + lifted_rep.summary());

    LambdaSpace LS = build_lambda(sd);
    const std::size_t qS = LS.dim();
    SemidirectProduct right = semidirect_product(lifted);

    SemidirectIso out{LS.product_algebra(), right.algebra, qL, qM,
                      Matrix(), Matrix(), ValidationReport{}};
    out.checks.merge("lifted_derivation_action", lifted_rep);

    // ψ⌊g, (x, m)⌋ = (⌊g, x⌋, ⌊g, m⌋), lowered through Λ(L⋉M).
    Matrix psi_amb(qL + qM, n * dS);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t k = 0; k < dS; ++k) {
            Vec cls;
            if (k < dL)
                cls = stack_vec(LL.class_of(g, vec_unit(dL, k)), vec_zero(qM));
            else
                cls = stack_vec(vec_zero(qL), LM.class_of(g, vec_unit(dM, k - dL)));
            for (std::size_t r = 0; r < qL + qM; ++r) psi_amb(r, g * dS + k) = cls[r];
        }
    auto psi = LS.quotient().try_lower(psi_amb);
    if (!psi) throw MathError("internal: psi does not kill the Lambda(L⋉M) relations");
    out.psi = std::move(*psi);

    // φ on each factor: ⌊g, x⌋ ↦ ⌊g, (x, 0)⌋ and ⌊h, m⌋ ↦ ⌊h, (0, m)⌋.
    Matrix phiL_amb(qS, n * dL);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t i = 0; i < dL; ++i) {
            Vec cls = LS.class_of(g, vec_unit(dS, i));
            for (std::size_t r = 0; r < qS; ++r) phiL_amb(r, g * dL + i) = cls[r];
        }
    auto phiL = LL.quotient().try_lower(phiL_amb);
    Matrix phiM_amb(qS, n * dM);
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t j = 0; j < dM; ++j) {
            Vec cls = LS.class_of(h, vec_unit(dS, dL + j));
            for (std::size_t r = 0; r < qS; ++r) phiM_amb(r, h * dM + j) = cls[r];
        }
    auto phiM = LM.quotient().try_lower(phiM_amb);
    if (!phiL || !phiM)
        throw MathError("internal: phi does not kill the factor relations");
    out.phi = hstack(*phiL, *phiM);

    bool dims = qS == qL + qM;
    out.checks.add("dimension_sum", dims,
                   dims ? ""
                        : "dim Lambda(L⋉M) = " + std::to_string(qS) + " but " +
                              std::to_string(qL) + " + " + std::to_string(qM));

    bool pp = out.psi * out.phi == Matrix::identity(qL + qM);
    out.checks.add("psi_phi_identity", pp, pp ? "" : "psi∘phi != id");
    bool ps = out.phi * out.psi == Matrix::identity(qS);
    out.checks.add("phi_psi_identity", ps, ps ? "" : "phi∘psi != id");

    bool hom = true;
    std::string hw;
    for (std::size_t u = 0; u < qS && hom; ++u)
        for (std::size_t w = 0; w < qS && hom; ++w) {
            Vec lhs = out.psi.apply(out.lambda_of_semidirect.basis_product(u, w));
            Vec rhs = out.semidirect_of_lambdas.multiply(out.psi.col(u), out.psi.col(w));
            if (lhs != rhs) {
                hom = false;
                hw = "psi fails the bracket on quotient basis pair (" + std::to_string(u) +
                     ", " + std::to_string(w) + ")";
            }
        }
    out.checks.add("psi_lie_homomorphism", hom, hw);

    bool equi = true;
    std::string ew;
    for (std::size_t g = 0; g < n && equi; ++g)
        if (out.psi * LS.theta(g) != block_diag(LL.theta(g), LM.theta(g)) * out.psi) {
            equi = false;
            ew = "psi not equivariant at g = " + std::to_string(g);
        }
    out.checks.add("psi_equivariant", equi, ew);

    // The proof's expansion on generator pairs:
    // ψ(⌊g,(x,m)⌋·⌊h,(y,n)⌋) = (⌊g, x·λ'(y)⌋, ⌊g, m·π'(n) + x π'(n) − λ'(y) m⌋)
    // with λ' = λ_{g⁻¹h}, π' = π_{g⁻¹h}.
    bool expansion = true;
    std::string xw;
    for (std::size_t g = 0; g < n && expansion; ++g)
        for (std::size_t h = 0; h < n && expansion; ++h) {
            const std::size_t gih = G.mul(G.inv(g), h);
            for (std::size_t k = 0; k < dS && expansion; ++k)
                for (std::size_t l = 0; l < dS && expansion; ++l) {
                    Vec x = vec_zero(dL), m = vec_zero(dM);
                    if (k < dL) x[k] = Rational(1); else m[k - dL] = Rational(1);
                    Vec y = vec_zero(dL), nn = vec_zero(dM);
                    if (l < dL) y[l] = Rational(1); else nn[l - dL] = Rational(1);
                    Vec yq = lambda.rep.pi[gih].apply(y);
                    Vec nq = pi.rep.pi[gih].apply(nn);
                    Vec lblock = da.L.multiply(x, yq);
                    Vec mblock = vec_add(da.M.multiply(m, nq),
                                         vec_sub(da.act_of(x).apply(nq), da.act_of(yq).apply(m)));
                    Vec rhs = stack_vec(LL.class_of(g, lblock), LM.class_of(g, mblock));
                    Vec prod = out.lambda_of_semidirect.multiply(LS.class_of(g, vec_unit(dS, k)),
                                                                 LS.class_of(h, vec_unit(dS, l)));
                    if (out.psi.apply(prod) != rhs) {
                        expansion = false;
                        xw = "proof expansion fails on generators (" + std::to_string(g) + ", " +
                             std::to_string(k) + "), (" + std::to_string(h) + ", " +
                             std::to_string(l) + ")";
                    }
                }
        }
    out.checks.add("psi_hom_identity", expansion, xw);
    return out;
}

}  // namespace pglob
