#pragma once

#include <stdexcept>
#include <string>

namespace polyadika {

// Malformed input text or file.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition of an operation does not hold (wrong arity, not a group, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exhaustive scan would exceed the configured probe budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace polyadika
