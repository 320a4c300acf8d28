#pragma once

#include <stdexcept>
#include <string>

namespace presam {

/// Bad arguments: dimension mismatches, out-of-range hyperparameters,
/// malformed configs.
class InvalidInputError : public std::invalid_argument {
public:
    explicit InvalidInputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A preconditioner that cannot play the requested role, e.g. a singular
/// constraint operator.
class InvalidPreconditionerError : public std::invalid_argument {
public:
    explicit InvalidPreconditionerError(const std::string& what) : std::invalid_argument(what) {}
};

/// Non-finite values produced where finite ones are required.
class NumericOverflowError : public std::runtime_error {
public:
    explicit NumericOverflowError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace presam
