#include "pglob/algebra.hpp"

#include <string>

namespace pglob {

Algebra::Algebra(std::size_t dim, std::vector<std::vector<Vec>> sc, std::optional<Vec> unit)
    : dim_(dim), sc_(std::move(sc)), unit_(std::move(unit)) {
    if (sc_.size() != dim_) throw InputError("structure constants: outer dimension mismatch");
    for (const auto& row : sc_) {
        if (row.size() != dim_) throw InputError("structure constants: middle dimension mismatch");
        for (const auto& v : row)
            if (v.size() != dim_) throw InputError("structure constants: inner dimension mismatch");
    }
    if (unit_) {
        if (unit_->size() != dim_) throw InputError("unit vector has wrong length");
        for (std::size_t i = 0; i < dim_; ++i) {
            Vec e = vec_unit(dim_, i);
            if (multiply(*unit_, e) != e || multiply(e, *unit_) != e)
                throw MathError("declared unit fails unit law on basis element " +
                                std::to_string(i));
        }
    }
}

Algebra Algebra::zero_multiplication(std::size_t dim) {
    std::vector<std::vector<Vec>> sc(dim, std::vector<Vec>(dim, vec_zero(dim)));
    return Algebra(dim, std::move(sc));
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw InputError("multiply: vector length mismatch");
    Vec r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            Rational c = x[i] * y[j];
            const Vec& eij = sc_[i][j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (!eij[k].is_zero()) r[k] += c * eij[k];
        }
    }
    return r;
}

Matrix Algebra::left_mult(const Vec& x) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        Vec col = multiply(x, vec_unit(dim_, j));
        for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
    }
    return m;
}

Matrix Algebra::right_mult(const Vec& x) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        Vec col = multiply(vec_unit(dim_, j), x);
        for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
    }
    return m;
}

TripleWitness why_not_associative(const Algebra& a) {
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vec ek = vec_unit(d, k);
                Vec lhs = a.multiply(a.basis_product(i, j), ek);
                Vec rhs = a.multiply(vec_unit(d, i), a.basis_product(j, k));
                if (lhs != rhs) return {false, i, j, k};
            }
    return {};
}

bool is_associative(const Algebra& a) { return why_not_associative(a).ok; }

TripleWitness why_not_lie(const Algebra& a) {
    const std::size_t d = a.dim();
    // e_i·e_i = 0 (stronger than antisymmetry in characteristic 2; over Q
    // they coincide, but the square condition is what the definition asks).
    for (std::size_t i = 0; i < d; ++i)
        if (!vec_is_zero(a.basis_product(i, i))) return {false, i, i, i};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (a.basis_product(i, j) != vec_scale(Rational(-1), a.basis_product(j, i)))
                return {false, i, j, j};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vec s = a.multiply(a.basis_product(i, j), vec_unit(d, k));
                s = vec_add(s, a.multiply(a.basis_product(j, k), vec_unit(d, i)));
                s = vec_add(s, a.multiply(a.basis_product(k, i), vec_unit(d, j)));
                if (!vec_is_zero(s)) return {false, i, j, k};
            }
    return {};
}

bool is_lie(const Algebra& a) { return why_not_lie(a).ok; }

bool is_ideal(const Algebra& a, const Subspace& s) {
    if (s.ambient_dim() != a.dim()) throw InputError("is_ideal: ambient dimension mismatch");
    for (const auto& b : s.basis())
        for (std::size_t i = 0; i < a.dim(); ++i) {
            Vec e = vec_unit(a.dim(), i);
            if (!s.contains(a.multiply(e, b)) || !s.contains(a.multiply(b, e))) return false;
        }
    return true;
}

bool is_subalgebra(const Algebra& a, const Subspace& s) {
    if (s.ambient_dim() != a.dim()) throw InputError("is_subalgebra: ambient dimension mismatch");
    for (const auto& b1 : s.basis())
        for (const auto& b2 : s.basis())
            if (!s.contains(a.multiply(b1, b2))) return false;
    return true;
}

bool is_algebra_map(const AlgebraMap& f) {
    const Algebra& src = *f.source;
    const Algebra& dst = *f.target;
    if (f.matrix.rows() != dst.dim() || f.matrix.cols() != src.dim())
        throw InputError("algebra map matrix shape mismatch");
    for (std::size_t i = 0; i < src.dim(); ++i)
        for (std::size_t j = 0; j < src.dim(); ++j) {
            Vec lhs = f.matrix.apply(src.basis_product(i, j));
            Vec rhs = dst.multiply(f.matrix.apply(vec_unit(src.dim(), i)),
                                   f.matrix.apply(vec_unit(src.dim(), j)));
            if (lhs != rhs) return false;
        }
    return true;
}

bool is_multiplicative(const Algebra& a, const Matrix& f) {
    AlgebraMap m{&a, &a, f};
    return is_algebra_map(m);
}

}  // namespace pglob
