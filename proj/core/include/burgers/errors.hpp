#pragma once

#include <stdexcept>
#include <string>

namespace burgers {

/// Raised when an input violates a documented precondition. `field()` names
/// the offending parameter so front ends can report it without parsing text.
class ValidationError : public std::invalid_argument {
public:
  ValidationError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

private:
  std::string field_;
};

/// Raised when an operation needs data a problem does not provide
/// (e.g. asking for the exact solution of a problem without one).
class UnsupportedOperation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Raised when sampled data or a field scanned for reduction holds NaN/Inf.
class NonFiniteError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace burgers
