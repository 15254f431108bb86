#pragma once

#include <utility>
#include <vector>

#include "sphereforms/rational.hpp"

namespace sphereforms {

/// Dense univariate polynomial over Q in z, constant term first, no trailing zeros.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static RationalPoly zero() { return {}; }
  static RationalPoly constant(Rational v);
  static RationalPoly variable();  // z

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const;

  /// p(-z)
  RationalPoly reflected() const;

  RationalPoly operator-() const;
  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const Rational& s, const RationalPoly& p);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const RationalPoly& a, const RationalPoly& b) { return !(a == b); }

  /// Euclidean division; divisor must be nonzero.
  static std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& num,
                                                      const RationalPoly& den);

 private:
  void trim();
  std::vector<Rational> c_;
};

RationalPoly pow(const RationalPoly& p, unsigned long e);

/// (1 + sign*z)^n
RationalPoly one_pm_z_power(int sign, unsigned n);

/// The unique minimal-degree pair with (1+z)^n P + (1-z)^n Q = 1 and
/// deg P, deg Q <= n-1, computed by extended Euclid with final degree
/// reduction. Throws DomainError for n <= 0.
std::pair<RationalPoly, RationalPoly> bezout_pair(int n);

/// Exact check of (1+z)^n P + (1-z)^n Q = 1 (any n >= 0).
bool verify_bezout(int n, const RationalPoly& P, const RationalPoly& Q);

}  // namespace sphereforms
