#include "pglob/rational.hpp"

#include <sstream>

namespace pglob {

namespace {

boost::multiprecision::cpp_int parse_int(std::string_view s) {
    if (s.empty()) throw InputError("empty integer in rational literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw InputError("sign without digits in rational literal");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw InputError("invalid character in rational literal: '" + std::string(s) + "'");
    return boost::multiprecision::cpp_int(std::string(s));
}

}  // namespace

Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    Rational r;
    if (slash == std::string_view::npos) {
        r.v_ = parse_int(s);
        return r;
    }
    auto num = parse_int(s.substr(0, slash));
    auto den = parse_int(s.substr(slash + 1));
    if (den == 0) throw InputError("rational with zero denominator: '" + std::string(s) + "'");
    if (den < 0) throw InputError("denominator must be positive (sign goes on the numerator): '" +
                                  std::string(s) + "'");
    r.v_ = boost::multiprecision::cpp_rational(num, den);
    return r;
}

std::string Rational::str() const {
    auto num = boost::multiprecision::numerator(v_);
    auto den = boost::multiprecision::denominator(v_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("vector size mismatch in addition");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("vector size mismatch in subtraction");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Rational& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec vec_zero(std::size_t n) { return Vec(n); }

Vec vec_unit(std::size_t n, std::size_t i) {
    Vec r(n);
    r.at(i) = Rational(1);
    return r;
}

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].str();
    }
    os << ")";
    return os.str();
}

}  // namespace pglob
