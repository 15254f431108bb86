#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sphereforms/rational.hpp"

namespace sphereforms {

class FreePolynomial;

/// Power product x^ex * y^ey * z^ez.
struct Monomial {
  std::uint32_t ex = 0;
  std::uint32_t ey = 0;
  std::uint32_t ez = 0;

  std::uint32_t degree() const { return ex + ey + ez; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.ex == b.ex && a.ey == b.ey && a.ez == b.ez;
  }
};

/// Graded lexicographic order with x > y > z, highest first.
inline bool graded_lex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  if (a.ex != b.ex) return a.ex > b.ex;
  if (a.ey != b.ey) return a.ey > b.ey;
  return a.ez > b.ez;
}

/// Element of Q[i][x,y,z] / (x^2 + y^2 + z^2 - 1) in normal form.
///
/// Normal form: the rewrite x^2 -> 1 - y^2 - z^2 has been applied to fixpoint,
/// so every stored monomial has ex <= 1. Terms are kept sorted in descending
/// graded-lex order (x > y > z) with no zero coefficients, which makes
/// structural equality coincide with ring equality.
class SphereElement {
 public:
  struct Term {
    Monomial mono;
    GaussianRational coeff;
  };

  SphereElement() = default;

  static SphereElement zero() { return SphereElement(); }
  static SphereElement one() { return constant(GaussianRational(1)); }
  static SphereElement constant(GaussianRational c);
  static SphereElement variable_x() { return monomial({1, 0, 0}, GaussianRational(1)); }
  static SphereElement variable_y() { return monomial({0, 1, 0}, GaussianRational(1)); }
  static SphereElement variable_z() { return monomial({0, 0, 1}, GaussianRational(1)); }
  /// Single term; applies the x^2 rewrite if needed.
  static SphereElement monomial(Monomial m, GaussianRational c);

  /// Normal form of an arbitrary polynomial in x, y, z (context must be exactly {x,y,z}).
  static SphereElement reduce(const FreePolynomial& raw);

  /// From already-normalized terms sorted descending; internal fast path.
  static SphereElement from_sorted_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == Monomial{});
  }
  /// Constant value; zero element yields 0.
  GaussianRational constant_value() const;
  const std::vector<Term>& terms() const { return terms_; }
  std::uint32_t degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

  SphereElement operator-() const;
  friend SphereElement operator+(const SphereElement& a, const SphereElement& b);
  friend SphereElement operator-(const SphereElement& a, const SphereElement& b);
  friend SphereElement operator*(const SphereElement& a, const SphereElement& b);
  friend SphereElement operator*(const GaussianRational& c, const SphereElement& p);
  friend bool operator==(const SphereElement& a, const SphereElement& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].mono == b.terms_[i].mono)) return false;
      if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
  }
  friend bool operator!=(const SphereElement& a, const SphereElement& b) { return !(a == b); }

 private:
  std::vector<Term> terms_;
};

SphereElement pow(const SphereElement& p, unsigned long e);

/// Coefficient-wise conjugation; fixes x, y, z. Ring involution.
SphereElement conj(const SphereElement& p);

/// The four distinguished divisors used by the localization machinery.
enum class SphereDivisor { OnePlusZ, OneMinusZ, XPlusIY, XMinusIY };

SphereElement divisor_element(SphereDivisor d);

/// Exact quotient p / d in the quotient ring, or nullopt if d does not divide p.
std::optional<SphereElement> try_divide(const SphereElement& p, SphereDivisor d);

}  // namespace sphereforms
