#include "sphereforms/rational_poly.hpp"

#include "sphereforms/errors.hpp"

namespace sphereforms {

void RationalPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

RationalPoly RationalPoly::constant(Rational v) {
  RationalPoly p;
  p.c_.push_back(std::move(v));
  p.trim();
  return p;
}

RationalPoly RationalPoly::variable() {
  RationalPoly p;
  p.c_ = {Rational(0), Rational(1)};
  return p;
}

Rational RationalPoly::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return c_.back();
}

RationalPoly RationalPoly::reflected() const {
  RationalPoly r = *this;
  for (std::size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = -r.c_[k];
  return r;
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.coeff(k) + b.coeff(k);
  r.trim();
  return r;
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + (-b); }

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RationalPoly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

RationalPoly operator*(const Rational& s, const RationalPoly& p) {
  if (sgn(s) == 0) return {};
  RationalPoly r = p;
  for (auto& v : r.c_) v *= s;
  return r;
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& num,
                                                           const RationalPoly& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  RationalPoly q, r = num;
  const long dd = den.degree();
  const Rational lead = den.leading();
  while (!r.is_zero() && r.degree() >= dd) {
    const long shift = r.degree() - dd;
    const Rational factor = r.leading() / lead;
    RationalPoly t;
    t.c_.assign(static_cast<std::size_t>(shift) + 1, Rational(0));
    t.c_.back() = factor;
    q = q + t;
    r = r - t * den;
  }
  return {q, r};
}

RationalPoly pow(const RationalPoly& p, unsigned long e) {
  RationalPoly acc = RationalPoly::constant(Rational(1));
  RationalPoly base = p;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

RationalPoly one_pm_z_power(int sign, unsigned n) {
  RationalPoly base;
  base = RationalPoly(std::vector<Rational>{Rational(1), Rational(sign >= 0 ? 1 : -1)});
  return pow(base, n);
}

std::pair<RationalPoly, RationalPoly> bezout_pair(int n) {
  if (n <= 0) throw DomainError("bezout_pair: n must be >= 1");
  const RationalPoly a = one_pm_z_power(+1, static_cast<unsigned>(n));
  const RationalPoly b = one_pm_z_power(-1, static_cast<unsigned>(n));

  // Extended Euclid tracking only the first cofactor: r = s*a (mod b).
  RationalPoly r0 = a, r1 = b;
  RationalPoly s0 = RationalPoly::constant(Rational(1)), s1 = RationalPoly::zero();
  while (!r1.is_zero()) {
    auto [q, rem] = RationalPoly::divmod(r0, r1);
    RationalPoly s2 = s0 - q * s1;
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  // r0 is a nonzero constant: (1+z)^n and (1-z)^n are coprime.
  const Rational g = r0.coeff(0);
  RationalPoly P = (Rational(1) / g) * s0;

  // Degree reduction: replace P by P mod (1-z)^n and absorb the quotient into Q.
  auto [k, Pred] = RationalPoly::divmod(P, b);
  P = Pred;
  // Q = (1 - (1+z)^n P) / (1-z)^n, exact by construction.
  auto [Q, rem] = RationalPoly::divmod(RationalPoly::constant(Rational(1)) - a * P, b);
  if (!rem.is_zero()) throw DomainError("bezout_pair: internal cofactor mismatch");
  return {P, Q};
}

bool verify_bezout(int n, const RationalPoly& P, const RationalPoly& Q) {
  if (n < 0) return false;
  const RationalPoly lhs = one_pm_z_power(+1, static_cast<unsigned>(n)) * P +
                           one_pm_z_power(-1, static_cast<unsigned>(n)) * Q;
  return lhs == RationalPoly::constant(Rational(1));
}

}  // namespace sphereforms
