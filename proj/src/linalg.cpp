#include "pglob/linalg.hpp"

#include <algorithm>

namespace pglob {

RrefResult rref(const Matrix& m) {
    Matrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!a(i, c).is_zero()) { p = i; break; }
        }
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
        }
        Rational inv_pivot = Rational(1) / a(r, c);
        for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv_pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Rational f = a(i, c);
            for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivot_cols.size(); }

std::optional<Matrix> invert(const Matrix& m) {
    if (m.rows() != m.cols()) throw InputError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    auto [red, pivots] = rref(hstack(m, Matrix::identity(n)));
    if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
    return inv;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw InputError("solve: rhs length mismatch");
    Matrix aug = hstack(m, Matrix::from_cols({b}, b.size()));
    auto [red, pivots] = rref(aug);
    // Inconsistent iff the augmented column is a pivot.
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = red(k, m.cols());
    return x;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& generators) {
    for (const auto& g : generators)
        if (g.size() != ambient) throw InputError("subspace generator has wrong length");
    Subspace s(ambient);
    if (generators.empty()) return s;
    auto [red, pivots] = rref(Matrix::from_rows(generators, ambient));
    for (std::size_t i = 0; i < pivots.size(); ++i) s.basis_.push_back(red.row(i));
    s.pivots_ = pivots;
    return s;
}

Subspace Subspace::zero(std::size_t ambient) { return Subspace(ambient); }

Subspace Subspace::full(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        s.basis_.push_back(vec_unit(ambient, i));
        s.pivots_.push_back(i);
    }
    return s;
}

Vec Subspace::reduce(Vec v) const {
    if (v.size() != ambient_) throw InputError("reduce: vector length mismatch");
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const Rational& c = v[pivots_[k]];
        if (c.is_zero()) continue;
        Rational f = c;  // basis rows have pivot entry 1
        for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * basis_[k][j];
    }
    return v;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw InputError("subspace ambient mismatch");
    for (const auto& b : other.basis_)
        if (!contains(b)) return false;
    return true;
}

Subspace kernel(const Matrix& m) {
    auto [red, pivots] = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols);
        v[f] = Rational(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -red(k, f);
        basis.push_back(std::move(v));
    }
    return Subspace::span(cols, basis);
}

Subspace image(const Matrix& m) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
    return Subspace::span(m.rows(), cols);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw InputError("subspace ambient mismatch in sum");
    std::vector<Vec> gens = a.basis();
    gens.insert(gens.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient_dim(), gens);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw InputError("subspace ambient mismatch in intersection");
    const std::size_t ka = a.dim(), kb = b.dim();
    if (ka == 0 || kb == 0) return Subspace::zero(a.ambient_dim());
    // Solve U^T x - W^T y = 0; intersection vectors are U^T x.
    Matrix ut = Matrix::from_rows(a.basis(), a.ambient_dim()).transpose();
    Matrix wt = Matrix::from_rows(b.basis(), b.ambient_dim()).transpose();
    Matrix stacked = hstack(ut, Rational(-1) * wt);
    Subspace combos = kernel(stacked);
    std::vector<Vec> gens;
    for (const auto& xy : combos.basis()) {
        Vec x(xy.begin(), xy.begin() + static_cast<std::ptrdiff_t>(ka));
        gens.push_back(ut.apply(x));
    }
    return Subspace::span(a.ambient_dim(), gens);
}

SubspaceCoords coords_of(const Subspace& s) {
    SubspaceCoords c{Matrix(s.ambient_dim(), s.dim()), Matrix(s.dim(), s.ambient_dim()), s};
    for (std::size_t k = 0; k < s.dim(); ++k) {
        for (std::size_t r = 0; r < s.ambient_dim(); ++r) c.incl(r, k) = s.basis()[k][r];
        c.sel(k, s.pivots()[k]) = Rational(1);
    }
    return c;
}

Matrix restrict_to(const Matrix& f, const SubspaceCoords& c) {
    Matrix mapped = f * c.incl;
    for (std::size_t k = 0; k < mapped.cols(); ++k)
        if (!c.space.contains(mapped.col(k)))
            throw MathError("map does not preserve the subspace");
    return c.sel * mapped;
}

QuotientSpace::QuotientSpace(std::size_t ambient, Subspace relations)
    : ambient_(ambient), relations_(std::move(relations)) {
    std::vector<bool> is_pivot(ambient_, false);
    for (auto p : relations_.pivots()) is_pivot[p] = true;
    for (std::size_t j = 0; j < ambient_; ++j)
        if (!is_pivot[j]) free_.push_back(j);

    const std::size_t q = free_.size();
    project_ = Matrix(q, ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) {
        Vec cls = relations_.reduce(vec_unit(ambient_, j));
        for (std::size_t k = 0; k < q; ++k) project_(k, j) = cls[free_[k]];
    }
    lift_ = Matrix(ambient_, q);
    for (std::size_t k = 0; k < q; ++k) lift_(free_[k], k) = Rational(1);
}

QuotientSpace make_quotient(std::size_t ambient_dim, const std::vector<Vec>& relations) {
    return QuotientSpace(ambient_dim, Subspace::span(ambient_dim, relations));
}

std::optional<Matrix> QuotientSpace::try_lower(const Matrix& f) const {
    if (f.cols() != ambient_) throw InputError("try_lower: map domain mismatch");
    for (const auto& r : relations_.basis()) {
        if (!vec_is_zero(f.apply(r))) return std::nullopt;
    }
    return f * lift_;
}

void LinearSystem::add_equation(Vec coefficients, Rational rhs) {
    if (coefficients.size() != n_) throw InputError("equation arity mismatch");
    rows_.push_back(std::move(coefficients));
    rhs_.push_back(std::move(rhs));
}

LinearSystem::Solution LinearSystem::solve() const {
    Solution sol;
    if (rows_.empty()) {
        sol.particular = Vec(n_);
        sol.kernel_basis = Subspace::full(n_).basis();
        return sol;
    }
    Matrix a = Matrix::from_rows(rows_, n_);
    sol.particular = pglob::solve(a, rhs_);
    if (sol.particular) sol.kernel_basis = kernel(a).basis();
    return sol;
}

}  // namespace pglob
