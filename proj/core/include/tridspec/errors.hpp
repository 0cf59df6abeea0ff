#pragma once

#include <stdexcept>
#include <string>

namespace tridspec {

/// Base type for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

/// Evaluation at or too close to a pole / zero divisor.
struct PoleError : Error {
  using Error::Error;
};

/// An iterative or truncated computation failed to converge.
struct ConvergenceError : Error {
  using Error::Error;
};

/// A structural invariant was violated (bad coefficient stream, etc.).
struct InvariantError : Error {
  using Error::Error;
};

}  // namespace tridspec
