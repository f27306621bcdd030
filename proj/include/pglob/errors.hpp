#pragma once

#include <stdexcept>
#include <string>

namespace pglob {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input: bad shapes, unresolved references, parse failures.
/// The CLI maps these to exit code 2.
class InputError : public Error {
public:
    explicit InputError(const std::string& msg) : Error(msg) {}
};

/// A mathematical requirement failed: invalid group table, broken axiom,
/// missing local unit, non-ideal images, and similar. The message names a
/// witness. The CLI maps these to exit code 1.
class MathError : public Error {
public:
    explicit MathError(const std::string& msg) : Error(msg) {}
};

}  // namespace pglob
