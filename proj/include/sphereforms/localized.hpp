#pragma once

#include <cstdint>

#include "sphereforms/sphere_element.hpp"

namespace sphereforms {

/// Element of the sphere ring localized at the monoid {(1+z)^a (1-z)^b}:
/// num / ((1+z)^a (1-z)^b), kept canonical (no denominator factor divides num
/// while its exponent is positive; zero is stored as (0, 0, 0)).
class LocalizedElement {
 public:
  LocalizedElement() = default;
  LocalizedElement(SphereElement num, std::uint32_t a, std::uint32_t b);
  LocalizedElement(const SphereElement& num) : LocalizedElement(num, 0, 0) {}  // NOLINT

  static LocalizedElement zero() { return {}; }
  static LocalizedElement one() { return LocalizedElement(SphereElement::one(), 0, 0); }

  const SphereElement& num() const { return num_; }
  std::uint32_t denom_plus_exp() const { return a_; }
  std::uint32_t denom_minus_exp() const { return b_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_global() const { return a_ == 0 && b_ == 0; }

  LocalizedElement operator-() const;
  friend LocalizedElement operator+(const LocalizedElement& u, const LocalizedElement& v);
  friend LocalizedElement operator-(const LocalizedElement& u, const LocalizedElement& v);
  friend LocalizedElement operator*(const LocalizedElement& u, const LocalizedElement& v);

  /// Equality by cross-multiplication in the sphere ring.
  friend bool operator==(const LocalizedElement& u, const LocalizedElement& v);
  friend bool operator!=(const LocalizedElement& u, const LocalizedElement& v) {
    return !(u == v);
  }

 private:
  SphereElement num_;
  std::uint32_t a_ = 0;
  std::uint32_t b_ = 0;
};

/// Inverse of a unit gamma*(1+z)^j(1-z)^k(x+iy)^m(x-iy)^l; throws NotAUnit
/// if num does not factor that way (tested by repeated exact division).
LocalizedElement loc_inv(const LocalizedElement& u);

LocalizedElement conj(const LocalizedElement& u);

/// (1+z)^a (1-z)^b as a denominator-free element.
SphereElement denominator_element(std::uint32_t a, std::uint32_t b);

}  // namespace sphereforms
