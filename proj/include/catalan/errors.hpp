#pragma once

#include <stdexcept>
#include <string>

namespace catalan {

/// Invalid user input: bad primes, out-of-range indices, mismatched sizes.
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed during a computation.
class ComputationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A symbolic expansion would exceed the configured term budget.
class BudgetExceeded : public ComputationError {
public:
  using ComputationError::ComputationError;
};

} // namespace catalan
