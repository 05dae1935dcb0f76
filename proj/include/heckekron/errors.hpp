#pragma once

#include <stdexcept>
#include <string>

namespace heckekron {

/// Bad input: malformed partition literal, violated precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation was refused because it exceeds the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant failed. Always an implementation bug; never caught
/// to recover.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace heckekron
