#include "pglob/group.hpp"

#include <array>
#include <string>

namespace pglob {

FiniteGroup FiniteGroup::validate(const std::vector<std::vector<std::size_t>>& table,
                                  std::optional<std::size_t> identity) {
    const std::size_t n = table.size();
    if (n == 0) throw InputError("empty Cayley table");
    for (std::size_t g = 0; g < n; ++g) {
        if (table[g].size() != n) throw InputError("Cayley table is not square");
        for (std::size_t h = 0; h < n; ++h)
            if (table[g][h] >= n)
                throw InputError("Cayley table entry out of range at (" + std::to_string(g) +
                                 ", " + std::to_string(h) + ")");
    }

    FiniteGroup G;
    G.n_ = n;
    G.table_.resize(n * n);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) G.table_[g * n + h] = table[g][h];

    // Identity: supplied or discovered.
    std::optional<std::size_t> e = identity;
    if (e && *e >= n) throw InputError("identity index out of range");
    if (!e) {
        for (std::size_t cand = 0; cand < n; ++cand) {
            bool ok = true;
            for (std::size_t g = 0; g < n; ++g)
                if (table[cand][g] != g || table[g][cand] != g) { ok = false; break; }
            if (ok) { e = cand; break; }
        }
        if (!e) throw MathError("NoIdentity: no element acts as a two-sided identity");
    } else {
        for (std::size_t g = 0; g < n; ++g)
            if (table[*e][g] != g || table[g][*e] != g)
                throw MathError("NoIdentity: declared identity " + std::to_string(*e) +
                                " fails at element " + std::to_string(g));
    }
    G.identity_ = *e;

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw MathError("NotAssociative: witness triple (" + std::to_string(a) + ", " +
                                    std::to_string(b) + ", " + std::to_string(c) + ")");

    G.inverse_.assign(n, n);
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = 0; h < n; ++h)
            if (table[g][h] == *e && table[h][g] == *e) { G.inverse_[g] = h; break; }
        if (G.inverse_[g] == n)
            throw MathError("NoInverse: element " + std::to_string(g) + " has no two-sided inverse");
    }
    return G;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0) throw InputError("cyclic group order must be positive");
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) t[g][h] = (g + h) % n;
    return validate(t, 0);
}

FiniteGroup FiniteGroup::symmetric3() {
    // Permutations of {0,1,2} in lexicographic one-line order:
    // 0:(012) id, 1:(021), 2:(102), 3:(120), 4:(201), 5:(210).
    auto perm = [](std::size_t idx) -> std::array<std::size_t, 3> {
        static const std::size_t p[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                            {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        return {p[idx][0], p[idx][1], p[idx][2]};
    };
    auto index_of = [&](const std::array<std::size_t, 3>& q) -> std::size_t {
        for (std::size_t i = 0; i < 6; ++i)
            if (perm(i) == q) return i;
        return 6;
    };
    std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
    for (std::size_t g = 0; g < 6; ++g)
        for (std::size_t h = 0; h < 6; ++h) {
            auto pg = perm(g), ph = perm(h);
            // (g·h)(x) = g(h(x))
            std::array<std::size_t, 3> comp = {pg[ph[0]], pg[ph[1]], pg[ph[2]]};
            t[g][h] = index_of(comp);
        }
    return validate(t, 0);
}

std::vector<std::vector<std::size_t>> FiniteGroup::table() const {
    std::vector<std::vector<std::size_t>> t(n_, std::vector<std::size_t>(n_));
    for (std::size_t g = 0; g < n_; ++g)
        for (std::size_t h = 0; h < n_; ++h) t[g][h] = table_[g * n_ + h];
    return t;
}

}  // namespace pglob
