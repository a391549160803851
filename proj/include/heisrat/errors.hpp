#pragma once

#include <stdexcept>

namespace heisrat {

/// Undefined field operation (e.g. inverting zero).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured size or step budget was exceeded; the computation is
/// inconclusive, not failed.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant did not hold. Indicates a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace heisrat
