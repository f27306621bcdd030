#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pglob/algebra.hpp"
#include "pglob/matrix.hpp"

namespace pglob::testing {

inline Rational q(long long n) { return Rational(n); }
inline Rational q(const std::string& s) { return Rational::parse(s); }

inline Vec v(std::initializer_list<long long> xs) {
    Vec out;
    for (auto x : xs) out.emplace_back(x);
    return out;
}

inline Matrix mat(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<Vec> rs;
    std::size_t cols = 0;
    for (auto& r : rows) {
        rs.push_back(v(r));
        cols = rs.back().size();
    }
    return Matrix::from_rows(rs, cols);
}

/// Deterministic xorshift generator for property tests.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 1) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long long small_int(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rational rational() {
        long long num = small_int(-6, 6);
        long long den = small_int(1, 4);
        return Rational(num, den);
    }
    Vec vec(std::size_t n) {
        Vec out(n);
        for (auto& x : out) x = rational();
        return out;
    }
    Matrix matrix(std::size_t rows, std::size_t cols) {
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational();
        return m;
    }
    /// Random invertible matrix built from unit-diagonal shears and a
    /// permutation, so invertibility is structural.
    Matrix invertible(std::size_t n) {
        Matrix m = Matrix::identity(n);
        for (int round = 0; round < 3; ++round)
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t j = static_cast<std::size_t>(small_int(0, (long long)n - 1));
                if (i == j) continue;
                Rational c(small_int(-2, 2));
                for (std::size_t k = 0; k < n; ++k) m(i, k) += c * m(j, k);
            }
        return m;
    }
};

/// K^n with componentwise multiplication (split commutative algebra).
inline Algebra split_algebra(std::size_t n) {
    std::vector<std::vector<Vec>> sc(n, std::vector<Vec>(n, vec_zero(n)));
    for (std::size_t i = 0; i < n; ++i) sc[i][i][i] = Rational(1);
    Vec unit(n, Rational(1));
    return Algebra(n, std::move(sc), unit);
}

/// Full 2x2 matrix algebra, basis e11, e12, e21, e22.
inline Algebra matrix2_algebra() {
    auto idx = [](std::size_t r, std::size_t c) { return r * 2 + c; };
    std::vector<std::vector<Vec>> sc(4, std::vector<Vec>(4, vec_zero(4)));
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t d = 0; d < 2; ++d)
                    if (b == c) sc[idx(a, b)][idx(c, d)][idx(a, d)] = Rational(1);
    Vec unit = vec_zero(4);
    unit[idx(0, 0)] = Rational(1);
    unit[idx(1, 1)] = Rational(1);
    return Algebra(4, std::move(sc), unit);
}

/// sl2-style Lie algebra: [h,e] = 2e, [h,f] = -2f, [e,f] = h (basis e, f, h).
inline Algebra sl2_algebra() {
    std::vector<std::vector<Vec>> sc(3, std::vector<Vec>(3, vec_zero(3)));
    auto set = [&](std::size_t i, std::size_t j, const Vec& val) {
        sc[i][j] = val;
        sc[j][i] = vec_scale(Rational(-1), val);
    };
    set(0, 1, v({0, 0, 1}));   // [e,f] = h
    set(2, 0, v({2, 0, 0}));   // [h,e] = 2e
    set(2, 1, v({0, -2, 0}));  // [h,f] = -2f
    return Algebra(3, std::move(sc));
}

/// Heisenberg Lie algebra: [x,y] = z, z central (basis x, y, z).
inline Algebra heisenberg_algebra() {
    std::vector<std::vector<Vec>> sc(3, std::vector<Vec>(3, vec_zero(3)));
    sc[0][1] = v({0, 0, 1});
    sc[1][0] = v({0, 0, -1});
    return Algebra(3, std::move(sc));
}

/// One-dimensional algebra with e·e = e.
inline Algebra idempotent_line() {
    return Algebra(1, {{v({1})}}, v({1}));
}

}  // namespace pglob::testing
