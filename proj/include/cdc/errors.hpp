#pragma once

#include <stdexcept>
#include <string>

namespace cdc {

/// Malformed text input (matrix blocks, code files, vector files, registries).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exhaustive computation would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction input violates one of the admissibility conditions.
class ConstructionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace cdc
