#pragma once

#include <stdexcept>
#include <string>

namespace jonesdeg {

/// Malformed or invalid input (PD text, corpus lines, flags).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Always indicates a bug or a
/// violated mathematical invariant, never bad user input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A computation was refused or aborted because it would exceed a
/// configured resource bound (crossing cap, boundary-state budget).
class ResourceLimit : public std::runtime_error {
 public:
  explicit ResourceLimit(const std::string& what, std::string progress = {})
      : std::runtime_error(what), progress_(std::move(progress)) {}

  const std::string& progress() const noexcept { return progress_; }

 private:
  std::string progress_;
};

/// Exact division of polynomials left a nonzero remainder.
class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace jonesdeg
