#ifndef IMBALANCE_ERRORS_HPP
#define IMBALANCE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace imbalance {

// Rejected input: malformed tokens, violated preconditions (non-maximal
// code, size mismatch, enumeration cap). Maps to CLI exit code 1.
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// A violated internal invariant (e.g. a non-twin pair in a balancing
// step). Always indicates a bug, never a property of valid input.
// Maps to CLI exit code 2.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace imbalance

#endif
