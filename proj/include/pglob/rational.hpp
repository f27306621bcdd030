#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pglob/errors.hpp"

namespace pglob {

/// Exact rational number over arbitrary-precision integers.
///
/// Always kept in canonical form: positive denominator, gcd(|num|, den) = 1.
/// Serializes as "p/q", or just "p" when the denominator is 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(long long num, long long den) : v_(num, den) {
        if (den == 0) throw InputError("rational with zero denominator");
    }

    static Rational parse(std::string_view s);

    std::string str() const;

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }

    std::string numerator_str() const { return boost::multiprecision::numerator(v_).str(); }
    std::string denominator_str() const { return boost::multiprecision::denominator(v_).str(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw InputError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

private:
    boost::multiprecision::cpp_rational v_;
};

/// Coordinate vector with exact rational entries.
using Vec = std::vector<Rational>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);
bool vec_is_zero(const Vec& v);
Vec vec_zero(std::size_t n);
Vec vec_unit(std::size_t n, std::size_t i);
std::string vec_str(const Vec& v);

}  // namespace pglob
