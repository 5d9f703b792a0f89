#pragma once

#include <stdexcept>
#include <string>

namespace smt {

// Bad arguments, out-of-range sizes, malformed input. CLI maps this to exit 2.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// An exact computation contradicted a statement that is supposed to hold
// identically (a straightening failed to exist, a weight failed to increase,
// a transition matrix failed to be triangular, ...). CLI maps this to exit 1.
class TheoremViolation : public std::runtime_error {
public:
    explicit TheoremViolation(const std::string& what)
        : std::runtime_error("THEOREM-VIOLATION: " + what) {}
};

// A linear system that must have a unique solution had several.
class IndependenceViolation : public std::runtime_error {
public:
    explicit IndependenceViolation(const std::string& what)
        : std::runtime_error("INDEPENDENCE-VIOLATION: " + what) {}
};

}  // namespace smt
