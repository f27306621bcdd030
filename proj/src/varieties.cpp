#include "pglob/varieties.hpp"

#include <algorithm>
#include <cctype>

namespace pglob {

Monomial Monomial::var(std::size_t index) {
    Monomial m;
    m.nodes_.push_back({static_cast<int>(index), -1, -1});
    m.root_ = 0;
    return m;
}

Monomial Monomial::mul(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.nodes_ = a.nodes_;
    const int offset = static_cast<int>(m.nodes_.size());
    for (auto n : b.nodes_) {
        if (n.left >= 0) { n.left += offset; n.right += offset; }
        m.nodes_.push_back(n);
    }
    m.nodes_.push_back({-1, a.root_, b.root_ + offset});
    m.root_ = static_cast<int>(m.nodes_.size()) - 1;
    return m;
}

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        if (pos >= s.size()) throw InputError("unexpected end of monomial text");
        return s[pos];
    }
    Monomial parse_term() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Monomial left = parse_term();
            Monomial right = parse_term();
            skip_ws();
            if (pos >= s.size() || s[pos] != ')')
                throw InputError("expected ')' in monomial text");
            ++pos;
            return Monomial::mul(left, right);
        }
        if (c == 'x') {
            ++pos;
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) throw InputError("expected variable number after 'x'");
            std::size_t idx = std::stoull(std::string(s.substr(start, pos - start)));
            if (idx == 0) throw InputError("variables are numbered from x1");
            return Monomial::var(idx - 1);
        }
        throw InputError(std::string("unexpected character '") + c + "' in monomial text");
    }
};

}  // namespace

Monomial Monomial::parse(std::string_view text) {
    Parser p{text};
    Monomial m = p.parse_term();
    p.skip_ws();
    if (p.pos != text.size()) throw InputError("trailing characters in monomial text");
    return m;
}

std::size_t Monomial::degree() const { return leaves().size(); }

void Monomial::leaves_node(int idx, std::vector<std::size_t>& out) const {
    const Node& n = nodes_[idx];
    if (n.var >= 0) {
        out.push_back(static_cast<std::size_t>(n.var));
        return;
    }
    leaves_node(n.left, out);
    leaves_node(n.right, out);
}

std::vector<std::size_t> Monomial::leaves() const {
    std::vector<std::size_t> out;
    leaves_node(root_, out);
    return out;
}

std::size_t Monomial::min_vars() const {
    std::size_t m = 0;
    for (auto v : leaves()) m = std::max(m, v + 1);
    return m;
}

Vec Monomial::eval_node(int idx, const Algebra& a, const std::vector<Vec>& args) const {
    const Node& n = nodes_[idx];
    if (n.var >= 0) return args.at(static_cast<std::size_t>(n.var));
    return a.multiply(eval_node(n.left, a, args), eval_node(n.right, a, args));
}

Vec Monomial::eval(const Algebra& a, const std::vector<Vec>& args) const {
    for (const auto& v : args)
        if (v.size() != a.dim()) throw InputError("monomial argument dimension mismatch");
    return eval_node(root_, a, args);
}

void Monomial::str_node(int idx, std::string& out) const {
    const Node& n = nodes_[idx];
    if (n.var >= 0) {
        out += "x" + std::to_string(n.var + 1);
        return;
    }
    out += "(";
    str_node(n.left, out);
    out += " ";
    str_node(n.right, out);
    out += ")";
}

std::string Monomial::str() const {
    std::string out;
    str_node(root_, out);
    return out;
}

bool Monomial::equal_nodes(const Monomial& a, int ia, const Monomial& b, int ib) {
    const Node& na = a.nodes_[ia];
    const Node& nb = b.nodes_[ib];
    if ((na.var >= 0) != (nb.var >= 0)) return false;
    if (na.var >= 0) return na.var == nb.var;
    return equal_nodes(a, na.left, b, nb.left) && equal_nodes(a, na.right, b, nb.right);
}

bool operator==(const Monomial& a, const Monomial& b) {
    return Monomial::equal_nodes(a, a.root_, b, b.root_);
}

Polynomial::Polynomial(std::vector<Term> terms, std::size_t n_vars)
    : terms_(std::move(terms)), n_vars_(n_vars) {
    if (terms_.empty()) throw InputError("polynomial needs at least one term");
    for (const auto& t : terms_)
        if (t.monomial.min_vars() > n_vars_)
            throw InputError("monomial uses a variable beyond n_vars");
}

Vec Polynomial::eval(const Algebra& a, const std::vector<Vec>& args) const {
    if (args.size() != n_vars_) throw InputError("polynomial argument count mismatch");
    Vec r = vec_zero(a.dim());
    for (const auto& t : terms_)
        r = vec_add(r, vec_scale(t.coeff, t.monomial.eval(a, args)));
    return r;
}

bool Polynomial::is_multilinear() const {
    for (const auto& t : terms_) {
        auto ls = t.monomial.leaves();
        if (ls.size() != n_vars_) return false;
        std::vector<std::size_t> sorted = ls;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < n_vars_; ++i)
            if (sorted[i] != i) return false;
    }
    return true;
}

std::set<std::size_t> Polynomial::variable_cover() const {
    std::set<std::size_t> cover;
    for (std::size_t v = 0; v < n_vars_; ++v) cover.insert(v);
    for (const auto& t : terms_) {
        auto ls = t.monomial.leaves();
        std::set<std::size_t> present(ls.begin(), ls.end());
        std::set<std::size_t> kept;
        std::set_intersection(cover.begin(), cover.end(), present.begin(), present.end(),
                              std::inserter(kept, kept.begin()));
        cover = std::move(kept);
    }
    return cover;
}

std::string Polynomial::str() const {
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) out += " + ";
        out += terms_[i].coeff.str() + "*" + terms_[i].monomial.str();
    }
    return out;
}

Polynomial Polynomial::associator() {
    Monomial x = Monomial::var(0), y = Monomial::var(1), z = Monomial::var(2);
    return Polynomial({{Rational(1), Monomial::mul(Monomial::mul(x, y), z)},
                       {Rational(-1), Monomial::mul(x, Monomial::mul(y, z))}},
                      3);
}

Polynomial Polynomial::anticommutator() {
    Monomial x = Monomial::var(0), y = Monomial::var(1);
    return Polynomial({{Rational(1), Monomial::mul(x, y)}, {Rational(1), Monomial::mul(y, x)}}, 2);
}

Polynomial Polynomial::jacobi() {
    Monomial x = Monomial::var(0), y = Monomial::var(1), z = Monomial::var(2);
    return Polynomial({{Rational(1), Monomial::mul(Monomial::mul(x, y), z)},
                       {Rational(1), Monomial::mul(Monomial::mul(y, z), x)},
                       {Rational(1), Monomial::mul(Monomial::mul(z, x), y)}},
                      3);
}

std::vector<Polynomial> associative_identities() { return {Polynomial::associator()}; }

std::vector<Polynomial> lie_identities() {
    return {Polynomial::anticommutator(), Polynomial::jacobi()};
}

IdentityWitness check_identity(const Algebra& a, const Polynomial& f) {
    if (!f.is_multilinear())
        throw MathError("NotMultilinear: basis checking is only sound for multilinear "
                        "identities; multilinearize first: " + f.str());
    const std::size_t d = a.dim();
    const std::size_t n = f.n_vars();
    if (d == 0) return {};
    std::vector<std::size_t> tuple(n, 0);
    std::vector<Vec> args(n);
    while (true) {
        for (std::size_t i = 0; i < n; ++i) args[i] = vec_unit(d, tuple[i]);
        if (!vec_is_zero(f.eval(a, args))) return {false, tuple};
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (++tuple[pos] < d) break;
            tuple[pos] = 0;
            if (pos == 0) return {};
        }
        if (n == 0) return {};
    }
}

bool satisfies_identity(const Algebra& a, const Polynomial& f) {
    return check_identity(a, f).holds;
}

}  // namespace pglob
