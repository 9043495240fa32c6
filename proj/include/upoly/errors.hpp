#pragma once

#include <stdexcept>
#include <string>

namespace upoly {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a structural invariant (non-normal poset, tableau outside
/// the polytope, malformed text form, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured budget. Never a truncation.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, unsigned long long bound)
      : Error(what), bound_(bound) {}

  /// Upper bound (or node count) that tripped the limit.
  unsigned long long bound() const noexcept { return bound_; }

 private:
  unsigned long long bound_;
};

/// An identity that must hold exactly did not (non-integral character value,
/// failed oracle comparison). Signals an implementation fault.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace upoly
