#pragma once

#include <optional>
#include <vector>

#include "pglob/linalg.hpp"
#include "pglob/report.hpp"

namespace pglob {

/// Finite-dimensional algebra over Q given by its structure-constant tensor:
/// e_i · e_j = Σ_k c[i][j][k] e_k. The product is not assumed associative.
/// An optional unit vector is validated on construction.
class Algebra {
public:
    Algebra() : dim_(0) {}  // zero-dimensional placeholder

    /// sc[i][j] is the coordinate vector of e_i · e_j (length dim each).
    Algebra(std::size_t dim, std::vector<std::vector<Vec>> sc,
            std::optional<Vec> unit = std::nullopt);

    /// Algebra with identically zero multiplication.
    static Algebra zero_multiplication(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const Vec& basis_product(std::size_t i, std::size_t j) const { return sc_[i][j]; }
    const std::optional<Vec>& unit() const { return unit_; }
    const std::vector<std::vector<Vec>>& structure_constants() const { return sc_; }

    /// Bilinear product Σ_{i,j} x_i y_j (e_i·e_j).
    Vec multiply(const Vec& x, const Vec& y) const;

    /// Matrix of left multiplication by x: y ↦ x·y.
    Matrix left_mult(const Vec& x) const;
    /// Matrix of right multiplication by x: y ↦ y·x.
    Matrix right_mult(const Vec& x) const;

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.dim_ == b.dim_ && a.sc_ == b.sc_ && a.unit_ == b.unit_;
    }

private:
    std::size_t dim_;
    std::vector<std::vector<Vec>> sc_;
    std::optional<Vec> unit_;
};

/// Witness for a failed basis-triple identity check.
struct TripleWitness {
    bool ok = true;
    std::size_t i = 0, j = 0, k = 0;
};

/// Associativity on all basis triples; sufficient by multilinearity.
bool is_associative(const Algebra& a);
TripleWitness why_not_associative(const Algebra& a);

/// Lie axioms on all basis elements/triples: e_i·e_i = 0, anticommutativity,
/// and the Jacobi identity; sufficient by multilinearity.
bool is_lie(const Algebra& a);
TripleWitness why_not_lie(const Algebra& a);

bool is_ideal(const Algebra& a, const Subspace& s);
bool is_subalgebra(const Algebra& a, const Subspace& s);

/// Linear map between algebras, stored as a matrix in the source/target bases.
struct AlgebraMap {
    const Algebra* source;
    const Algebra* target;
    Matrix matrix;
};

/// f(e_i·e_j) = f(e_i)·f(e_j) on all basis pairs (multiplicativity; the unit
/// is deliberately not required to be preserved).
bool is_algebra_map(const AlgebraMap& f);

/// Multiplicativity of a square matrix as an endomorphism of a.
bool is_multiplicative(const Algebra& a, const Matrix& f);

}  // namespace pglob
