#pragma once

#include <optional>
#include <vector>

#include "pglob/matrix.hpp"

namespace pglob {

struct RrefResult {
    Matrix mat;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form with leftmost-nonzero pivoting. Deterministic:
/// the output is the unique RREF of the input.
RrefResult rref(const Matrix& m);

/// Rank via row reduction.
std::size_t rank(const Matrix& m);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> invert(const Matrix& m);

/// One solution of m·x = b, or nullopt if inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Linear subspace of Q^n in canonical form: the basis rows are the nonzero
/// rows of an RREF, so equal subspaces compare structurally equal.
class Subspace {
public:
    /// Span of the given vectors inside Q^ambient.
    static Subspace span(std::size_t ambient, const std::vector<Vec>& generators);
    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    /// Residue of v after eliminating this subspace's pivot coordinates.
    /// The result is zero exactly when v lies in the subspace.
    Vec reduce(Vec v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    Subspace(std::size_t ambient) : ambient_(ambient) {}
    std::size_t ambient_;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

/// Null space {v : m·v = 0} in canonical form.
Subspace kernel(const Matrix& m);
/// Column space in canonical form.
Subspace image(const Matrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
/// Intersection, computed through the kernel of the stacked coefficient system.
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// Coordinates on a subspace: the RREF basis as an inclusion matrix together
/// with the pivot-selecting left inverse (sel·incl = id).
struct SubspaceCoords {
    Matrix incl;  // ambient × dim, basis vectors as columns
    Matrix sel;   // dim × ambient, pivot-row selection
    Subspace space;
};

SubspaceCoords coords_of(const Subspace& s);

/// f in subspace coordinates (sel·f·incl); throws MathError unless f maps the
/// subspace into itself.
Matrix restrict_to(const Matrix& f, const SubspaceCoords& c);

/// Quotient Q^ambient / span(relations) with canonical coordinates: the free
/// (non-pivot) columns of the relation RREF, in ascending order.
///
/// `project` maps ambient coordinates onto quotient coordinates and kills
/// every relation; `lift` embeds quotient coordinates back on the free
/// columns, so project∘lift = id.
class QuotientSpace {
public:
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return free_.size(); }
    const Subspace& relations() const { return relations_; }
    const std::vector<std::size_t>& free_coords() const { return free_; }
    const Matrix& project() const { return project_; }
    const Matrix& lift() const { return lift_; }

    Vec project_vec(const Vec& ambient_vec) const { return project_.apply(ambient_vec); }

    /// Lowers a linear map f (given on ambient coordinates, as an out×ambient
    /// matrix) through the quotient: returns g with g∘project = f, or nullopt
    /// if f does not vanish on the relations.
    std::optional<Matrix> try_lower(const Matrix& f) const;

    friend QuotientSpace make_quotient(std::size_t ambient_dim, const std::vector<Vec>& relations);

private:
    QuotientSpace(std::size_t ambient, Subspace relations);
    std::size_t ambient_;
    Subspace relations_;
    std::vector<std::size_t> free_;
    Matrix project_;
    Matrix lift_;
};

QuotientSpace make_quotient(std::size_t ambient_dim, const std::vector<Vec>& relations);

/// Homogeneous/affine linear system over Q, solved exactly.
class LinearSystem {
public:
    explicit LinearSystem(std::size_t n_unknowns) : n_(n_unknowns) {}

    std::size_t n_unknowns() const { return n_; }
    void add_equation(Vec coefficients, Rational rhs);

    struct Solution {
        std::optional<Vec> particular;  // nullopt when inconsistent
        std::vector<Vec> kernel_basis;
        bool unique() const { return particular.has_value() && kernel_basis.empty(); }
    };
    Solution solve() const;

private:
    std::size_t n_;
    std::vector<Vec> rows_;
    Vec rhs_;
};

}  // namespace pglob
