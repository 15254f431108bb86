#include "sphereforms/localized.hpp"

#include <algorithm>

#include "sphereforms/errors.hpp"

namespace sphereforms {

SphereElement denominator_element(std::uint32_t a, std::uint32_t b) {
  return pow(divisor_element(SphereDivisor::OnePlusZ), a) *
         pow(divisor_element(SphereDivisor::OneMinusZ), b);
}

LocalizedElement::LocalizedElement(SphereElement num, std::uint32_t a, std::uint32_t b)
    : num_(std::move(num)), a_(a), b_(b) {
  if (num_.is_zero()) {
    a_ = b_ = 0;
    return;
  }
  while (a_ > 0) {
    auto q = try_divide(num_, SphereDivisor::OnePlusZ);
    if (!q) break;
    num_ = std::move(*q);
    --a_;
  }
  while (b_ > 0) {
    auto q = try_divide(num_, SphereDivisor::OneMinusZ);
    if (!q) break;
    num_ = std::move(*q);
    --b_;
  }
}

LocalizedElement LocalizedElement::operator-() const {
  LocalizedElement r;
  r.num_ = -num_;
  r.a_ = a_;
  r.b_ = b_;
  return r;
}

LocalizedElement operator+(const LocalizedElement& u, const LocalizedElement& v) {
  const std::uint32_t a = std::max(u.a_, v.a_);
  const std::uint32_t b = std::max(u.b_, v.b_);
  SphereElement num = u.num_ * denominator_element(a - u.a_, b - u.b_) +
                      v.num_ * denominator_element(a - v.a_, b - v.b_);
  return LocalizedElement(std::move(num), a, b);
}

LocalizedElement operator-(const LocalizedElement& u, const LocalizedElement& v) {
  return u + (-v);
}

LocalizedElement operator*(const LocalizedElement& u, const LocalizedElement& v) {
  return LocalizedElement(u.num_ * v.num_, u.a_ + v.a_, u.b_ + v.b_);
}

bool operator==(const LocalizedElement& u, const LocalizedElement& v) {
  return u.num_ * denominator_element(v.a_, v.b_) == v.num_ * denominator_element(u.a_, u.b_);
}

LocalizedElement loc_inv(const LocalizedElement& u) {
  if (u.is_zero()) throw NotAUnit("loc_inv: zero is not a unit");

  SphereElement residue = u.num();
  std::uint32_t j = 0, k = 0, m = 0, l = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& [d, count] : {std::pair{SphereDivisor::OnePlusZ, &j},
                                   std::pair{SphereDivisor::OneMinusZ, &k},
                                   std::pair{SphereDivisor::XPlusIY, &m},
                                   std::pair{SphereDivisor::XMinusIY, &l}}) {
      while (auto q = try_divide(residue, d)) {
        residue = std::move(*q);
        ++*count;
        progress = true;
      }
    }
  }
  if (!residue.is_constant()) {
    throw NotAUnit("loc_inv: numerator is not a unit of the localization");
  }
  const GaussianRational gamma = residue.constant_value();

  // 1/(x+iy) = (x-iy)/((1+z)(1-z)) and symmetrically, so
  // u^-1 = gamma^-1 (x-iy)^m (x+iy)^l (1+z)^a (1-z)^b / ((1+z)^(j+m+l) (1-z)^(k+m+l)).
  SphereElement num = gamma.inverse() *
                      (pow(divisor_element(SphereDivisor::XMinusIY), m) *
                       pow(divisor_element(SphereDivisor::XPlusIY), l) *
                       denominator_element(u.denom_plus_exp(), u.denom_minus_exp()));
  return LocalizedElement(std::move(num), j + m + l, k + m + l);
}

LocalizedElement conj(const LocalizedElement& u) {
  // Denominators (1+-z)^k have real coefficients, so conjugation acts on num only
  // and cannot create new common factors.
  return LocalizedElement(conj(u.num()), u.denom_plus_exp(), u.denom_minus_exp());
}

}  // namespace sphereforms
