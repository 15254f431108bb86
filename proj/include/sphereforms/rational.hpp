#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "sphereforms/errors.hpp"

namespace sphereforms {

/// Arbitrary-precision rational, canonical form (lowest terms, positive denominator).
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  if (den == 0) throw DomainError("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Element of Q[i]: re + im*i with exact rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long r) : re(r), im(0) {}                 // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational unit_i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  bool is_imaginary() const { return sgn(re) == 0 && sgn(im) != 0; }
  bool is_one() const { return re == 1 && sgn(im) == 0; }

  GaussianRational conj() const { return {re, -im}; }

  /// re^2 + im^2; zero iff the value is zero.
  Rational norm2() const { return re * re + im * im; }

  GaussianRational inverse() const {
    if (is_zero()) throw DomainError("GaussianRational: division by zero");
    Rational n = norm2();
    return {re / n, -im / n};
  }

  GaussianRational operator-() const { return {-re, -im}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    // Fast paths: most coefficients in this domain are pure real or pure imaginary.
    const bool a_re0 = sgn(a.re) == 0, a_im0 = sgn(a.im) == 0;
    const bool b_re0 = sgn(b.re) == 0, b_im0 = sgn(b.im) == 0;
    if (a_im0 && b_im0) return {a.re * b.re, Rational(0)};
    if (a_re0 && b_re0) return {-(a.im * b.im), Rational(0)};
    if (a_im0 && b_re0) return {Rational(0), a.re * b.im};
    if (a_re0 && b_im0) return {Rational(0), a.im * b.re};
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }
};

inline GaussianRational conj(const GaussianRational& q) { return q.conj(); }

}  // namespace sphereforms
