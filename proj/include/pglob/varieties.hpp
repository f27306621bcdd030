#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pglob/algebra.hpp"

namespace pglob {

/// Non-associative monomial: a full binary tree whose leaves carry variable
/// indices, i.e. a parenthesized word. Text form "((x1 x2) x3)".
class Monomial {
public:
    static Monomial var(std::size_t index);
    static Monomial mul(const Monomial& a, const Monomial& b);
    static Monomial parse(std::string_view text);

    std::size_t degree() const;
    /// Variable indices at the leaves, left to right.
    std::vector<std::size_t> leaves() const;
    /// Largest variable index + 1.
    std::size_t min_vars() const;

    Vec eval(const Algebra& a, const std::vector<Vec>& args) const;
    std::string str() const;

    friend bool operator==(const Monomial& a, const Monomial& b);

private:
    struct Node {
        int var = -1;  // >= 0 for leaves
        int left = -1, right = -1;
    };
    std::vector<Node> nodes_;
    int root_ = -1;

    Vec eval_node(int idx, const Algebra& a, const std::vector<Vec>& args) const;
    void str_node(int idx, std::string& out) const;
    void leaves_node(int idx, std::vector<std::size_t>& out) const;
    static bool equal_nodes(const Monomial& a, int ia, const Monomial& b, int ib);
};

struct Term {
    Rational coeff;
    Monomial monomial;
};

/// Finite non-associative polynomial identity in variables x1..x{n_vars}.
class Polynomial {
public:
    Polynomial(std::vector<Term> terms, std::size_t n_vars);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t n_vars() const { return n_vars_; }

    Vec eval(const Algebra& a, const std::vector<Vec>& args) const;

    /// Every monomial uses each of x1..xn exactly once.
    bool is_multilinear() const;

    /// Variable indices occurring in every monomial. A nonempty result
    /// certifies the hypothesis "some x_i appears in each monomial".
    std::set<std::size_t> variable_cover() const;

    std::string str() const;

    // The two identity families exercised end to end.
    static Polynomial associator();       // (x1 x2)x3 - x1(x2 x3)
    static Polynomial anticommutator();   // x1 x2 + x2 x1
    static Polynomial jacobi();           // (x1 x2)x3 + (x2 x3)x1 + (x3 x1)x2

private:
    std::vector<Term> terms_;
    std::size_t n_vars_;
};

std::vector<Polynomial> associative_identities();
std::vector<Polynomial> lie_identities();

struct IdentityWitness {
    bool holds = true;
    std::vector<std::size_t> basis_tuple;  // indices of the violating basis tuple
};

/// Exact identity check on all basis tuples; sound and complete for
/// multilinear f. Throws MathError("NotMultilinear...") otherwise.
IdentityWitness check_identity(const Algebra& a, const Polynomial& f);
bool satisfies_identity(const Algebra& a, const Polynomial& f);

}  // namespace pglob
