#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sphereforms {

/// Malformed text input; `position` is the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class DomainError : public std::domain_error {
  using std::domain_error::domain_error;
};

/// Elements from different variable contexts were mixed in one operation.
class VariableMismatch : public std::logic_error {
  using std::logic_error::logic_error;
};

/// loc_inv was asked to invert a non-unit of the localized ring.
class NotAUnit : public std::domain_error {
  using std::domain_error::domain_error;
};

/// A (P, Q) pair failed the exact Bezout identity check.
class BezoutMismatch : public std::domain_error {
  using std::domain_error::domain_error;
};

class NonUnitDeterminant : public std::domain_error {
  using std::domain_error::domain_error;
};

class NotOrientationPreserving : public std::domain_error {
  using std::domain_error::domain_error;
};

class SingularSample : public std::domain_error {
  using std::domain_error::domain_error;
};

/// Loop sampling too coarse to determine the winding integer reliably.
class Undersampled : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sphereforms
