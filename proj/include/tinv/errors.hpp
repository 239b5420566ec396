#pragma once

#include <stdexcept>
#include <string>

namespace tinv {

/// Raised for inputs that violate a documented precondition (parity,
/// singular intersection form, unknown series name, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when data that should satisfy an algebraic invariant does not.
class Inconsistent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tinv
