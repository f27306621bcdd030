#include "pglob/lambda.hpp"

#include <string>

namespace pglob {

namespace {

std::string gi(std::size_t g, std::size_t i) {
    return "(" + std::to_string(g) + ", " + std::to_string(i) + ")";
}

}  // namespace

Vec LambdaSpace::embed(std::size_t g, const Vec& m) const {
    if (m.size() != rep_.dim) throw InputError("class_of: vector length mismatch");
    if (g >= rep_.group.order()) throw InputError("class_of: group index out of range");
    Vec v = vec_zero(ambient_dim());
    for (std::size_t i = 0; i < rep_.dim; ++i) v[flat(g, i)] = m[i];
    return v;
}

Vec LambdaSpace::class_of(std::size_t g, const Vec& m) const {
    return quotient_.project_vec(embed(g, m));
}

const Algebra& LambdaSpace::product_algebra() const {
    if (!product_)
        throw MathError("NotIdeal: no product on Lambda -- " + product_refusal_);
    return *product_;
}

Vec LambdaSpace::product(const Vec& x, const Vec& y) const {
    return product_algebra().multiply(x, y);
}

std::vector<Vec> lambda_relations(const PartialRep& rep) {
    const std::size_t n = rep.group.order();
    const std::size_t d = rep.dim;
    const std::size_t ambient = n * d;
    std::vector<Vec> rels;
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) {
            const std::size_t gh = rep.group.mul(g, h);
            const std::size_t hi = rep.group.inv(h);
            for (std::size_t j = 0; j < d; ++j) {
                Vec m = rep.pi[hi].apply(vec_unit(d, j));  // spans im pi_{h^-1}
                Vec moved = rep.pi[h].apply(m);
                Vec rel = vec_zero(ambient);
                bool nonzero = false;
                for (std::size_t i = 0; i < d; ++i) {
                    rel[g * d + i] += moved[i];
                    rel[gh * d + i] -= m[i];
                }
                for (const auto& x : rel)
                    if (!x.is_zero()) { nonzero = true; break; }
                if (nonzero) rels.push_back(std::move(rel));
            }
        }
    return rels;
}

LambdaSpace build_lambda(const PartialRep& rep) {
    auto axioms = check_partial_rep(rep);
    if (!axioms.overall())
        throw MathError("InvalidRep: cannot build Lambda:\n" + axioms.summary());

    LambdaSpace ls;
    ls.rep_ = rep;
    const std::size_t n = rep.group.order();
    const std::size_t d = rep.dim;
    const std::size_t ambient = n * d;
    const std::size_t e = rep.group.identity();

    ls.quotient_ = make_quotient(ambient, lambda_relations(rep));
    const QuotientSpace& qs = ls.quotient_;
    const std::size_t q = qs.dim();

    // Θ_g on quotient coordinates, lowered from the ambient block permutation.
    for (std::size_t g = 0; g < n; ++g) {
        Matrix perm(ambient, ambient);
        for (std::size_t h = 0; h < n; ++h) {
            const std::size_t gh = rep.group.mul(g, h);
            for (std::size_t i = 0; i < d; ++i) perm(gh * d + i, h * d + i) = Rational(1);
        }
        auto lowered = qs.try_lower(qs.project() * perm);
        if (!lowered)
            throw MathError("internal: Theta_" + std::to_string(g) +
                            " does not preserve the relations");
        ls.theta_.push_back(std::move(*lowered));
    }

    // ι(m) = ⌊1, m⌋.
    Matrix block1(ambient, d);
    for (std::size_t i = 0; i < d; ++i) block1(e * d + i, i) = Rational(1);
    ls.iota_ = qs.project() * block1;

    // τ⌊g, m⌋ = π_g(m), lowered from the ambient evaluation map.
    Matrix tau_amb(d, ambient);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t i = 0; i < d; ++i) {
            Vec col = rep.pi[g].apply(vec_unit(d, i));
            for (std::size_t k = 0; k < d; ++k) tau_amb(k, g * d + i) = col[k];
        }
    auto tau = qs.try_lower(tau_amb);
    if (!tau) throw MathError("internal: tau does not vanish on the relations");
    ls.tau_ = std::move(*tau);

    // Construction invariants.
    if (!ls.theta_[e].is_identity()) throw MathError("internal: Theta_1 != id");
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            if (ls.theta_[g] * ls.theta_[h] != ls.theta_[rep.group.mul(g, h)])
                throw MathError("internal: Theta is not a homomorphism at (" + std::to_string(g) +
                                ", " + std::to_string(h) + ")");
    if (ls.tau_ * ls.iota_ != Matrix::identity(d))
        throw MathError("internal: tau∘iota != id");
    for (std::size_t g = 0; g < n; ++g) {
        const std::size_t gi_ = rep.group.inv(g);
        if (ls.iota_ * rep.pi[g] * rep.pi[gi_] != ls.theta_[g] * ls.iota_ * rep.pi[gi_])
            throw MathError("internal: iota is not equivariant at g = " + std::to_string(g));
    }

    // Product, for ideal partial representations on algebras.
    if (rep.target_kind == TargetKind::algebra) {
        auto ideal = check_ideal_condition(rep);
        if (!ideal.overall()) {
            ls.product_refusal_ = "ideal condition fails:\n" + ideal.summary();
        } else {
            const Algebra& A = *rep.algebra;
            // Classes of products of generators: ⌊g, e_i · π_{g⁻¹h}(e_j)⌋.
            std::vector<std::vector<Vec>> gen(ambient, std::vector<Vec>(ambient));
            for (std::size_t g = 0; g < n; ++g)
                for (std::size_t h = 0; h < n; ++h) {
                    const std::size_t gih = rep.group.mul(rep.group.inv(g), h);
                    for (std::size_t i = 0; i < d; ++i)
                        for (std::size_t j = 0; j < d; ++j) {
                            Vec prod =
                                A.multiply(vec_unit(d, i), rep.pi[gih].apply(vec_unit(d, j)));
                            gen[g * d + i][h * d + j] = ls.class_of(g, prod);
                        }
                }
            // Single-valuedness: the bilinear extension kills relations in
            // either argument (two applications of the lowering lemma).
            for (const auto& r : qs.relations().basis()) {
                for (std::size_t right = 0; right < ambient; ++right) {
                    Vec acc = vec_zero(q);
                    for (std::size_t left = 0; left < ambient; ++left)
                        if (!r[left].is_zero())
                            acc = vec_add(acc, vec_scale(r[left], gen[left][right]));
                    if (!vec_is_zero(acc))
                        throw MathError("internal: product not single-valued in first argument");
                }
                for (std::size_t left = 0; left < ambient; ++left) {
                    Vec acc = vec_zero(q);
                    for (std::size_t right = 0; right < ambient; ++right)
                        if (!r[right].is_zero())
                            acc = vec_add(acc, vec_scale(r[right], gen[left][right]));
                    if (!vec_is_zero(acc))
                        throw MathError("internal: product not single-valued in second argument");
                }
            }
            std::vector<std::vector<Vec>> sc(q, std::vector<Vec>(q));
            const auto& free = qs.free_coords();
            for (std::size_t u = 0; u < q; ++u)
                for (std::size_t w = 0; w < q; ++w) sc[u][w] = gen[free[u]][free[w]];
            ls.product_ = Algebra(q, std::move(sc));
        }
    } else {
        ls.product_refusal_ = "module-level construction (no algebra target)";
    }
    return ls;
}

LambdaSpace build_lambda(const IdealPartialRep& rep) {
    LambdaSpace ls = build_lambda(rep.rep);
    if (!ls.has_product())
        throw MathError("NotIdeal: " + ls.product_refusal());
    return ls;
}

ValidationReport check_product_well_defined(const LambdaSpace& ls) {
    ValidationReport out;
    if (!ls.has_product()) {
        out.add("product_present", false, ls.product_refusal());
        return out;
    }
    const PartialRep& rep = ls.rep();
    const Algebra& A = *rep.algebra;
    const std::size_t n = rep.group.order();
    const std::size_t d = rep.dim;

    // ⌊g, a·π_{g⁻¹h}(b)⌋ = ⌊h, π_{h⁻¹g}(a)·b⌋ on all generator pairs.
    bool agree = true;
    std::string w;
    for (std::size_t g = 0; g < n && agree; ++g)
        for (std::size_t h = 0; h < n && agree; ++h) {
            const std::size_t gih = rep.group.mul(rep.group.inv(g), h);
            const std::size_t hig = rep.group.mul(rep.group.inv(h), g);
            for (std::size_t i = 0; i < d && agree; ++i)
                for (std::size_t j = 0; j < d && agree; ++j) {
                    Vec lhs = ls.class_of(
                        g, A.multiply(vec_unit(d, i), rep.pi[gih].apply(vec_unit(d, j))));
                    Vec rhs = ls.class_of(
                        h, A.multiply(rep.pi[hig].apply(vec_unit(d, i)), vec_unit(d, j)));
                    if (lhs != rhs) {
                        agree = false;
                        w = "formulas disagree on generators " + gi(g, i) + ", " + gi(h, j);
                    }
                }
        }
    out.add("two_formulas_agree", agree, w);

    // Products of equal classes coincide: representative independence over
    // the relation span, in both arguments.
    bool single = true;
    std::string sw;
    const auto& qs = ls.quotient();
    const std::size_t ambient = qs.ambient_dim();
    auto gen_product = [&](std::size_t left, std::size_t right) {
        const std::size_t g = left / d, i = left % d;
        const std::size_t h = right / d, j = right % d;
        const std::size_t gih = rep.group.mul(rep.group.inv(g), h);
        return ls.class_of(g, A.multiply(vec_unit(d, i), rep.pi[gih].apply(vec_unit(d, j))));
    };
    for (const auto& r : qs.relations().basis()) {
        for (std::size_t other = 0; other < ambient && single; ++other) {
            Vec acc1 = vec_zero(ls.dim()), acc2 = vec_zero(ls.dim());
            for (std::size_t k = 0; k < ambient; ++k) {
                if (r[k].is_zero()) continue;
                acc1 = vec_add(acc1, vec_scale(r[k], gen_product(k, other)));
                acc2 = vec_add(acc2, vec_scale(r[k], gen_product(other, k)));
            }
            if (!vec_is_zero(acc1) || !vec_is_zero(acc2)) {
                single = false;
                sw = "a relation vector has a nonzero product against generator index " +
                     std::to_string(other);
            }
        }
        if (!single) break;
    }
    out.add("single_valued", single, sw);
    return out;
}

ValidationReport check_variety(const LambdaSpace& ls, const std::vector<Polynomial>& identities) {
    ValidationReport out;
    const Algebra& LA = ls.product_algebra();
    const PartialRep& rep = ls.rep();
    const Algebra& A = *rep.algebra;
    const std::size_t n = rep.group.order();
    const std::size_t d = rep.dim;
    const std::size_t ambient = n * d;

    for (std::size_t fi = 0; fi < identities.size(); ++fi) {
        const Polynomial& f = identities[fi];
        const std::string tag = "identity_" + std::to_string(fi);
        auto cover = f.variable_cover();
        if (cover.empty())
            throw MathError("HypothesisFailed: no variable appears in every monomial of " +
                            f.str());
        out.add(tag + ".hypothesis", true);

        auto witness = check_identity(LA, f);
        std::string w;
        if (!witness.holds) {
            w = "violated on quotient basis tuple (";
            for (std::size_t k = 0; k < witness.basis_tuple.size(); ++k)
                w += (k ? ", " : "") + std::to_string(witness.basis_tuple[k]);
            w += ")";
        }
        out.add(tag + ".vanishes", witness.holds, w);

        // Single-block collapse on generator tuples (spot check, capped
        // deterministically by lexicographic enumeration).
        const std::size_t deg = f.n_vars();
        bool collapse = true;
        std::string cw;
        constexpr std::size_t kTupleCap = 1296;
        for (const auto& term : f.terms()) {
            if (!collapse) break;
            for (std::size_t i : cover) {
                if (!collapse) break;
                std::vector<std::size_t> tuple(deg, 0);
                std::size_t count = 0;
                while (count < kTupleCap) {
                    std::vector<Vec> lambda_args(deg);
                    std::vector<Vec> block_args(deg);
                    const std::size_t g_i = tuple[i] / d;
                    for (std::size_t k = 0; k < deg; ++k) {
                        const std::size_t gk = tuple[k] / d, jk = tuple[k] % d;
                        lambda_args[k] = ls.quotient().project().col(tuple[k]);
                        if (k == i) {
                            block_args[k] = vec_unit(d, jk);
                        } else {
                            const std::size_t move = rep.group.mul(rep.group.inv(g_i), gk);
                            block_args[k] = rep.pi[move].apply(vec_unit(d, jk));
                        }
                    }
                    Vec lhs = term.monomial.eval(LA, lambda_args);
                    Vec rhs = ls.class_of(g_i, term.monomial.eval(A, block_args));
                    if (lhs != rhs) {
                        collapse = false;
                        cw = "collapse fails for monomial " + term.monomial.str() +
                             " at pivot variable x" + std::to_string(i + 1);
                        break;
                    }
                    ++count;
                    std::size_t pos = deg;
                    bool done = deg == 0;
                    while (pos > 0) {
                        --pos;
                        if (++tuple[pos] < ambient) break;
                        tuple[pos] = 0;
                        if (pos == 0) done = true;
                    }
                    if (done) break;
                }
            }
        }
        out.add(tag + ".monomial_collapse", collapse, cw);
    }
    return out;
}

ValidationReport check_globalization(const LambdaSpace& ls) {
    const Algebra& LA = ls.product_algebra();
    const PartialRep& rep = ls.rep();
    const Algebra& A = *rep.algebra;
    const std::size_t n = rep.group.order();
    const std::size_t d = rep.dim;
    ValidationReport out;

    bool inj = kernel(ls.iota()).dim() == 0;
    out.add("iota_injective", inj, inj ? "" : "iota has a nonzero kernel");

    AlgebraMap iota_map{&A, &LA, ls.iota()};
    bool mult = is_algebra_map(iota_map);
    out.add("iota_multiplicative", mult, mult ? "" : "iota(ab) != iota(a)iota(b)");

    Subspace iota_image = image(ls.iota());
    bool ideal = is_ideal(LA, iota_image);
    out.add("iota_image_ideal", ideal, ideal ? "" : "iota(A) is not a bilateral ideal");

    // (ii) The restriction of Θ to ι(A) is isomorphic to the induced action:
    // matching domains and intertwined maps.
    bool restr = true;
    std::string rw;
    for (std::size_t g = 0; g < n && restr; ++g) {
        Subspace lhs = image(ls.iota() * rep.pi[g]);
        Subspace rhs = subspace_intersect(image(ls.theta(g) * ls.iota()), iota_image);
        if (lhs != rhs) {
            restr = false;
            rw = "iota(A_g) != Theta_g(iota(A)) ∩ iota(A) at g = " + std::to_string(g);
        }
        const std::size_t ginv = rep.group.inv(g);
        if (restr && ls.iota() * rep.pi[g] * rep.pi[ginv] !=
                         ls.theta(g) * ls.iota() * rep.pi[ginv]) {
            restr = false;
            rw = "iota does not intertwine alpha_g and Theta_g at g = " + std::to_string(g);
        }
    }
    out.add("restriction_isomorphic", restr, rw);

    Subspace orbit = Subspace::zero(ls.dim());
    for (std::size_t g = 0; g < n; ++g)
        orbit = subspace_sum(orbit, image(ls.theta(g) * ls.iota()));
    bool spans = orbit == Subspace::full(ls.dim());
    out.add("orbit_sum_full", spans, spans ? "" : "sum of Theta_g(iota(A)) is a proper subspace");

    bool section = ls.tau() * ls.iota() == Matrix::identity(d);
    out.add("tau_section", section, section ? "" : "tau∘iota != id");

    bool tau_mult = true;
    std::string tw;
    for (std::size_t u = 0; u < ls.dim() && tau_mult; ++u)
        for (std::size_t w = 0; w < ls.dim() && tau_mult; ++w) {
            Vec lhs = ls.tau().apply(LA.basis_product(u, w));
            Vec rhs = A.multiply(ls.tau().col(u), ls.tau().col(w));
            if (lhs != rhs) {
                tau_mult = false;
                tw = "tau not multiplicative on quotient basis pair (" + std::to_string(u) + ", " +
                     std::to_string(w) + ")";
            }
        }
    out.add("tau_multiplicative", tau_mult, tw);

    // Θ_g(ι(a))·ι(b) = Θ_g(ι(a))·ι(ε_g(b)).
    bool iuc = true;
    std::string uw;
    for (std::size_t g = 0; g < n && iuc; ++g) {
        Matrix eps = rep.epsilon(g);
        for (std::size_t a = 0; a < d && iuc; ++a)
            for (std::size_t b = 0; b < d && iuc; ++b) {
                Vec ta = ls.theta(g).apply(ls.iota().apply(vec_unit(d, a)));
                Vec lhs = LA.multiply(ta, ls.iota().apply(vec_unit(d, b)));
                Vec rhs = LA.multiply(ta, ls.iota().apply(eps.apply(vec_unit(d, b))));
                if (lhs != rhs) {
                    iuc = false;
                    uw = "ideal universal condition fails at g = " + std::to_string(g) +
                         ", basis pair (" + std::to_string(a) + ", " + std::to_string(b) + ")";
                }
            }
    }
    out.add("ideal_universal_condition", iuc, uw);
    return out;
}

ComparisonResult compare_globalization(const LambdaSpace& ls, const GlobalizationCandidate& other) {
    const Algebra& LA = ls.product_algebra();
    const PartialRep& rep = ls.rep();
    const Algebra& A = *rep.algebra;
    const Algebra& B = other.algebra;
    const std::size_t n = rep.group.order();
    const std::size_t d = rep.dim;
    const Matrix& emb = other.embedding;

    if (other.action.group != rep.group)
        throw InputError("comparison candidate has a different group");
    if (other.action.dim != B.dim() || emb.rows() != B.dim() || emb.cols() != d)
        throw InputError("comparison candidate shape mismatch");

    ValidationReport pre;
    pre.merge("global_action", check_global_action(other.action));

    bool inj = kernel(emb).dim() == 0;
    pre.add("embedding_injective", inj, inj ? "" : "iota' has a nonzero kernel");
    AlgebraMap emb_map{&A, &B, emb};
    bool mult = is_algebra_map(emb_map);
    pre.add("embedding_multiplicative", mult, mult ? "" : "iota' is not an algebra map");
    Subspace emb_image = image(emb);
    bool ideal = is_ideal(B, emb_image);
    pre.add("embedding_image_ideal", ideal, ideal ? "" : "iota'(A) is not an ideal of B");

    bool restr = true;
    std::string rw;
    for (std::size_t g = 0; g < n && restr; ++g) {
        Subspace lhs = image(emb * rep.pi[g]);
        Subspace rhs = subspace_intersect(image(other.action.maps[g] * emb), emb_image);
        if (lhs != rhs) {
            restr = false;
            rw = "iota'(A_g) != Theta'_g(iota'(A)) ∩ iota'(A) at g = " + std::to_string(g);
        }
        const std::size_t ginv = rep.group.inv(g);
        if (restr &&
            emb * rep.pi[g] * rep.pi[ginv] != other.action.maps[g] * emb * rep.pi[ginv]) {
            restr = false;
            rw = "iota' does not intertwine the actions at g = " + std::to_string(g);
        }
    }
    pre.add("restriction_isomorphic", restr, rw);

    Subspace orbit = Subspace::zero(B.dim());
    for (std::size_t g = 0; g < n; ++g)
        orbit = subspace_sum(orbit, image(other.action.maps[g] * emb));
    bool spans = orbit == Subspace::full(B.dim());
    pre.add("orbit_sum_full", spans, spans ? "" : "B != sum of Theta'_g(iota'(A))");

    bool iuc = true;
    std::string uw;
    for (std::size_t g = 0; g < n && iuc; ++g) {
        Matrix eps = rep.epsilon(g);
        for (std::size_t a = 0; a < d && iuc; ++a)
            for (std::size_t b = 0; b < d && iuc; ++b) {
                Vec ta = other.action.maps[g].apply(emb.apply(vec_unit(d, a)));
                Vec lhs = B.multiply(ta, emb.apply(vec_unit(d, b)));
                Vec rhs = B.multiply(ta, emb.apply(eps.apply(vec_unit(d, b))));
                if (lhs != rhs) {
                    iuc = false;
                    uw = "ideal universal condition fails at g = " + std::to_string(g);
                }
            }
    }
    pre.add("ideal_universal_condition", iuc, uw);

    // Derived sanity: Θ'_g(a)·b = ι'(π_g(a·π_{g⁻¹}(b))).
    bool lemma = true;
    std::string lw;
    for (std::size_t g = 0; g < n && lemma; ++g) {
        const std::size_t ginv = rep.group.inv(g);
        for (std::size_t a = 0; a < d && lemma; ++a)
            for (std::size_t b = 0; b < d && lemma; ++b) {
                Vec lhs = B.multiply(other.action.maps[g].apply(emb.apply(vec_unit(d, a))),
                                     emb.apply(vec_unit(d, b)));
                Vec inner =
                    A.multiply(vec_unit(d, a), rep.pi[ginv].apply(vec_unit(d, b)));
                Vec rhs = emb.apply(rep.pi[g].apply(inner));
                if (lhs != rhs) {
                    lemma = false;
                    lw = "basic computation identity fails at g = " + std::to_string(g);
                }
            }
    }
    pre.add("basic_computation", lemma, lw);

    if (!pre.overall())
        throw MathError("PrerequisiteFailed: candidate is not a compatible globalization:\n" +
                        pre.summary());

    // φ on generators: ⌊g, a⌋ ↦ Θ'_g(ι'(a)).
    Matrix f(B.dim(), ls.ambient_dim());
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t i = 0; i < d; ++i) {
            Vec col = other.action.maps[g].apply(emb.apply(vec_unit(d, i)));
            for (std::size_t r = 0; r < B.dim(); ++r) f(r, ls.flat(g, i)) = col[r];
        }
    auto lowered = ls.quotient().try_lower(f);
    if (!lowered) throw MathError("internal: comparison morphism does not kill the relations");
    Matrix phi = std::move(*lowered);

    ComparisonResult res{phi, {}};
    res.checks.merge("prerequisites", pre);
    bool surj = image(phi) == Subspace::full(B.dim());
    res.checks.add("surjective", surj, surj ? "" : "phi is not onto B");
    bool phi_mult = true;
    std::string pw;
    for (std::size_t u = 0; u < ls.dim() && phi_mult; ++u)
        for (std::size_t w = 0; w < ls.dim() && phi_mult; ++w)
            if (phi.apply(LA.basis_product(u, w)) != B.multiply(phi.col(u), phi.col(w))) {
                phi_mult = false;
                pw = "phi not multiplicative on quotient basis pair (" + std::to_string(u) +
                     ", " + std::to_string(w) + ")";
            }
    res.checks.add("multiplicative", phi_mult, pw);
    bool equi = true;
    std::string ew;
    for (std::size_t g = 0; g < n && equi; ++g)
        if (phi * ls.theta(g) != other.action.maps[g] * phi) {
            equi = false;
            ew = "phi not equivariant at g = " + std::to_string(g);
        }
    res.checks.add("equivariant", equi, ew);
    bool factors = phi * ls.iota() == emb;
    res.checks.add("factors_iota", factors, factors ? "" : "phi∘iota != iota'");
    return res;
}

FactorizationResult factor_through_lambda(const LambdaSpace& ls, const GlobalAction& beta,
                                          const Matrix& psi) {
    const PartialRep& rep = ls.rep();
    const std::size_t n = rep.group.order();
    const std::size_t d = rep.dim;
    if (beta.group != rep.group) throw InputError("factorization target has a different group");
    if (psi.rows() != beta.dim || psi.cols() != d)
        throw InputError("factorization map shape mismatch");
    {
        auto ga = check_global_action(beta);
        if (!ga.overall()) throw MathError("factorization target is not a global action:\n" +
                                           ga.summary());
    }
    // ψ equivariant: ψ∘α_g = β_g∘ψ on im π_{g⁻¹}.
    for (std::size_t g = 0; g < n; ++g) {
        const std::size_t ginv = rep.group.inv(g);
        if (psi * rep.pi[g] * rep.pi[ginv] != beta.maps[g] * psi * rep.pi[ginv])
            throw MathError("psi is not equivariant at g = " + std::to_string(g));
    }

    Matrix f(beta.dim, ls.ambient_dim());
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t i = 0; i < d; ++i) {
            Vec col = beta.maps[g].apply(psi.apply(vec_unit(d, i)));
            for (std::size_t r = 0; r < beta.dim; ++r) f(r, ls.flat(g, i)) = col[r];
        }
    auto lowered = ls.quotient().try_lower(f);
    if (!lowered) throw MathError("internal: factorization does not kill the relations");

    FactorizationResult res{std::move(*lowered), false, {}};
    bool factors = res.factor * ls.iota() == psi;
    res.checks.add("factors_iota", factors, factors ? "" : "psi~∘iota != psi");
    bool equi = true;
    std::string ew;
    for (std::size_t g = 0; g < n && equi; ++g)
        if (res.factor * ls.theta(g) != beta.maps[g] * res.factor) {
            equi = false;
            ew = "psi~ not equivariant at g = " + std::to_string(g);
        }
    res.checks.add("equivariant", equi, ew);

    // Uniqueness: the affine system {Z·iota = psi, Z·Theta_g = beta_g·Z}
    // must have a zero-dimensional solution space.
    const std::size_t q = ls.dim();
    const std::size_t x = beta.dim;
    LinearSystem sys(x * q);
    for (std::size_t r = 0; r < x; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            Vec row(x * q);
            for (std::size_t j = 0; j < q; ++j) row[r * q + j] = ls.iota()(j, c);
            sys.add_equation(std::move(row), psi(r, c));
        }
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t r = 0; r < x; ++r)
            for (std::size_t c = 0; c < q; ++c) {
                Vec row(x * q);
                for (std::size_t j = 0; j < q; ++j) row[r * q + j] += ls.theta(g)(j, c);
                for (std::size_t j = 0; j < x; ++j) row[j * q + c] -= beta.maps[g](r, j);
                sys.add_equation(std::move(row), Rational(0));
            }
    auto sol = sys.solve();
    res.unique = sol.unique();
    res.checks.add("unique", res.unique,
                   res.unique ? ""
                              : (sol.particular ? "solution space has positive dimension"
                                                : "factorization system inconsistent"));
    if (sol.particular && res.unique) {
        Matrix z(x, q);
        for (std::size_t r = 0; r < x; ++r)
            for (std::size_t c = 0; c < q; ++c) z(r, c) = (*sol.particular)[r * q + c];
        res.checks.add("matches_formula", z == res.factor,
                       z == res.factor ? "" : "solver disagrees with beta_g∘psi formula");
    }
    return res;
}

}  // namespace pglob
