#pragma once

#include <stdexcept>
#include <string>

namespace axcat {

// Raised when an operation's precondition is violated by the caller
// (mismatched universes, ill-formed executions, bad configuration...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an input exceeds a combinatorial guard.
class CapExceeded : public UsageError {
 public:
  using UsageError::UsageError;
};

}  // namespace axcat
