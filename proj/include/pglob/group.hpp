#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pglob/errors.hpp"

namespace pglob {

/// Finite group given extensionally by its Cayley table.
///
/// Elements are the indices 0..n-1 and table[g][h] = g·h. Construction goes
/// through validate(), which checks associativity, discovers the identity and
/// all inverses, and throws a MathError naming a witness on failure.
class FiniteGroup {
public:
    FiniteGroup() = default;  // empty placeholder; construct through validate()

    static FiniteGroup validate(const std::vector<std::vector<std::size_t>>& table,
                                std::optional<std::size_t> identity = std::nullopt);

    static FiniteGroup cyclic(std::size_t n);
    static FiniteGroup symmetric3();

    std::size_t order() const { return n_; }
    std::size_t identity() const { return identity_; }

    std::size_t mul(std::size_t g, std::size_t h) const {
        check_index(g);
        check_index(h);
        return table_[g * n_ + h];
    }
    std::size_t inv(std::size_t g) const {
        check_index(g);
        return inverse_[g];
    }

    std::vector<std::vector<std::size_t>> table() const;

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.n_ == b.n_ && a.table_ == b.table_;
    }
    friend bool operator!=(const FiniteGroup& a, const FiniteGroup& b) { return !(a == b); }

private:
    void check_index(std::size_t g) const {
        if (g >= n_) throw InputError("group element index out of range");
    }

    std::size_t n_ = 0;
    std::vector<std::size_t> table_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
};

}  // namespace pglob
