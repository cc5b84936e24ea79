#pragma once

#include <stdexcept>
#include <string>

namespace hesslab {

/// Bad user input: parse errors, undeclared variables, out-of-range degrees,
/// arity mismatches. Maps to CLI exit code 1.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured budget (symbolic determinant size, witness attempts, term
/// count) was exhausted before a certified answer was reached. Exit code 2.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal self-check failed (e.g. Poincare duality of A, replay of a
/// certificate). Never a user error. Exit code 3.
class invariant_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require_input(bool ok, const std::string& what) {
    if (!ok) throw input_error(what);
}

inline void require_invariant(bool ok, const std::string& what) {
    if (!ok) throw invariant_error(what);
}

} // namespace hesslab
