#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pglob/rational.hpp"

namespace pglob {

/// Dense matrix over exact rationals, row-major storage.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
    /// Matrix whose columns are the given vectors.
    static Matrix from_cols(const std::vector<Vec>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    /// Matrix-vector product m·v.
    Vec apply(const Vec& v) const;

    Matrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& c, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

/// Stacks b below a (matching column counts).
Matrix vstack(const Matrix& a, const Matrix& b);
/// Places b to the right of a (matching row counts).
Matrix hstack(const Matrix& a, const Matrix& b);

}  // namespace pglob
