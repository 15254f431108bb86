#include "sphereforms/sphere_element.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "sphereforms/errors.hpp"
#include "sphereforms/free_polynomial.hpp"

namespace sphereforms {

namespace {

// Packed monomial key for hash accumulation: 20 bits per exponent.
inline std::uint64_t pack(std::uint32_t ex, std::uint32_t ey, std::uint32_t ez) {
  return (static_cast<std::uint64_t>(ex) << 40) | (static_cast<std::uint64_t>(ey) << 20) | ez;
}

inline Monomial unpack(std::uint64_t key) {
  return Monomial{static_cast<std::uint32_t>(key >> 40),
                  static_cast<std::uint32_t>((key >> 20) & 0xFFFFF),
                  static_cast<std::uint32_t>(key & 0xFFFFF)};
}

using Accumulator = std::unordered_map<std::uint64_t, GaussianRational>;

inline void acc_add(Accumulator& acc, std::uint64_t key, const GaussianRational& c) {
  auto [it, inserted] = acc.try_emplace(key, c);
  if (!inserted) it->second += c;
}

// Adds c * x^ex y^ey z^ez in normal form; ex may be >= 2, in which case
// x^2 -> 1 - y^2 - z^2 is applied through a cached power table.
void acc_add_reduced(Accumulator& acc, std::uint32_t ex, std::uint32_t ey, std::uint32_t ez,
                     const GaussianRational& c, std::vector<SphereElement>& x2_powers) {
  if (ex <= 1) {
    acc_add(acc, pack(ex, ey, ez), c);
    return;
  }
  const std::uint32_t rem = ex & 1U;
  const std::uint32_t half = ex >> 1U;
  while (x2_powers.size() <= half) {
    // x^2 image: 1 - y^2 - z^2
    static const SphereElement x2_image = [] {
      std::vector<SphereElement::Term> ts;
      ts.push_back({Monomial{0, 2, 0}, GaussianRational(-1)});
      ts.push_back({Monomial{0, 0, 2}, GaussianRational(-1)});
      ts.push_back({Monomial{0, 0, 0}, GaussianRational(1)});
      std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        return graded_lex_greater(a.mono, b.mono);
      });
      return SphereElement::from_sorted_terms(std::move(ts));
    }();
    x2_powers.push_back(x2_powers.empty() ? SphereElement::one()
                                          : x2_powers.back() * x2_image);
  }
  for (const auto& t : x2_powers[half].terms()) {
    acc_add(acc, pack(rem, ey + t.mono.ey, ez + t.mono.ez), c * t.coeff);
  }
}

SphereElement collect(Accumulator&& acc) {
  std::vector<SphereElement::Term> ts;
  ts.reserve(acc.size());
  for (auto& [key, c] : acc) {
    if (!c.is_zero()) ts.push_back({unpack(key), std::move(c)});
  }
  std::sort(ts.begin(), ts.end(),
            [](const auto& a, const auto& b) { return graded_lex_greater(a.mono, b.mono); });
  return SphereElement::from_sorted_terms(std::move(ts));
}

}  // namespace

SphereElement SphereElement::constant(GaussianRational c) {
  SphereElement p;
  if (!c.is_zero()) p.terms_.push_back({Monomial{}, std::move(c)});
  return p;
}

SphereElement SphereElement::monomial(Monomial m, GaussianRational c) {
  if (c.is_zero()) return {};
  if (m.ex <= 1) {
    SphereElement p;
    p.terms_.push_back({m, std::move(c)});
    return p;
  }
  Accumulator acc;
  std::vector<SphereElement> cache;
  acc_add_reduced(acc, m.ex, m.ey, m.ez, c, cache);
  return collect(std::move(acc));
}

SphereElement SphereElement::from_sorted_terms(std::vector<Term> terms) {
  SphereElement p;
  p.terms_ = std::move(terms);
  return p;
}

SphereElement SphereElement::reduce(const FreePolynomial& raw) {
  if (raw.variables() != std::vector<std::string>{"x", "y", "z"}) {
    throw VariableMismatch("reduce expects the variable context {x, y, z}");
  }
  Accumulator acc;
  acc.reserve(raw.terms().size() * 2);
  std::vector<SphereElement> cache;
  for (const auto& [e, c] : raw.terms()) {
    acc_add_reduced(acc, e[0], e[1], e[2], c, cache);
  }
  return collect(std::move(acc));
}

GaussianRational SphereElement::constant_value() const {
  if (terms_.empty()) return GaussianRational(0);
  if (terms_.size() == 1 && terms_[0].mono == Monomial{}) return terms_[0].coeff;
  throw DomainError("constant_value: element is not constant");
}

SphereElement SphereElement::operator-() const {
  SphereElement r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
  return r;
}

SphereElement operator+(const SphereElement& a, const SphereElement& b) {
  std::vector<SphereElement::Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    const auto& ta = a.terms_[i];
    const auto& tb = b.terms_[j];
    if (ta.mono == tb.mono) {
      GaussianRational c = ta.coeff + tb.coeff;
      if (!c.is_zero()) out.push_back({ta.mono, std::move(c)});
      ++i, ++j;
    } else if (graded_lex_greater(ta.mono, tb.mono)) {
      out.push_back(ta);
      ++i;
    } else {
      out.push_back(tb);
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) out.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) out.push_back(b.terms_[j]);
  return SphereElement::from_sorted_terms(std::move(out));
}

SphereElement operator-(const SphereElement& a, const SphereElement& b) { return a + (-b); }

SphereElement operator*(const SphereElement& a, const SphereElement& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Accumulator acc;
  acc.reserve(a.terms_.size() * 2 + b.terms_.size() * 2);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      const std::uint32_t ex = ta.mono.ex + tb.mono.ex;
      const std::uint32_t ey = ta.mono.ey + tb.mono.ey;
      const std::uint32_t ez = ta.mono.ez + tb.mono.ez;
      GaussianRational c = ta.coeff * tb.coeff;
      if (ex <= 1) {
        acc_add(acc, pack(ex, ey, ez), c);
      } else {
        // ex == 2 at most, since both factors are in normal form.
        acc_add(acc, pack(0, ey, ez), c);
        acc_add(acc, pack(0, ey + 2, ez), -c);
        acc_add(acc, pack(0, ey, ez + 2), -c);
      }
    }
  }
  return collect(std::move(acc));
}

SphereElement operator*(const GaussianRational& c, const SphereElement& p) {
  if (c.is_zero()) return {};
  std::vector<SphereElement::Term> out;
  out.reserve(p.terms_.size());
  for (const auto& t : p.terms_) out.push_back({t.mono, c * t.coeff});
  return SphereElement::from_sorted_terms(std::move(out));
}

SphereElement pow(const SphereElement& p, unsigned long e) {
  SphereElement acc = SphereElement::one();
  SphereElement base = p;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

SphereElement conj(const SphereElement& p) {
  std::vector<SphereElement::Term> out;
  out.reserve(p.terms().size());
  for (const auto& t : p.terms()) out.push_back({t.mono, t.coeff.conj()});
  return SphereElement::from_sorted_terms(std::move(out));
}

SphereElement divisor_element(SphereDivisor d) {
  const SphereElement one = SphereElement::one();
  const SphereElement x = SphereElement::variable_x();
  const SphereElement y = SphereElement::variable_y();
  const SphereElement z = SphereElement::variable_z();
  const GaussianRational i = GaussianRational::unit_i();
  switch (d) {
    case SphereDivisor::OnePlusZ:
      return one + z;
    case SphereDivisor::OneMinusZ:
      return one - z;
    case SphereDivisor::XPlusIY:
      return x + i * y;
    case SphereDivisor::XMinusIY:
      return x - i * y;
  }
  throw DomainError("divisor_element: bad divisor");
}

namespace {

// Bivariate slice in (ey, ez) for a fixed x-degree; keyed (ey, ez).
using Slice = std::unordered_map<std::uint64_t, GaussianRational>;

inline std::uint64_t skey(std::uint32_t ey, std::uint32_t ez) {
  return (static_cast<std::uint64_t>(ey) << 20) | ez;
}

void split_by_x(const SphereElement& p, Slice& x0, Slice& x1) {
  for (const auto& t : p.terms()) {
    (t.mono.ex == 0 ? x0 : x1)[skey(t.mono.ey, t.mono.ez)] = t.coeff;
  }
}

// Exact division of a bivariate slice by (1 + sign*z); nullopt if not exact.
// Works one ey-group at a time via synthetic division in z.
std::optional<Slice> slice_divide_one_pm_z(const Slice& s, int sign) {
  // group: ey -> (ez -> coeff)
  std::unordered_map<std::uint32_t, std::map<std::uint32_t, GaussianRational>> groups;
  for (const auto& [key, c] : s) {
    groups[static_cast<std::uint32_t>(key >> 20)].emplace(static_cast<std::uint32_t>(key & 0xFFFFF),
                                                          c);
  }
  Slice out;
  for (const auto& [ey, g] : groups) {
    const std::uint32_t d = g.rbegin()->first;
    std::vector<GaussianRational> a(d + 1);
    for (const auto& [ez, c] : g) a[ez] = c;
    if (d == 0) return std::nullopt;  // nonzero constant in z is never divisible
    std::vector<GaussianRational> q(d);
    if (sign > 0) {
      // (1+z): a_k = q_k + q_{k-1}
      q[d - 1] = a[d];
      for (std::uint32_t k = d - 1; k >= 1; --k) q[k - 1] = a[k] - q[k];
      if (!(a[0] - q[0]).is_zero()) return std::nullopt;
    } else {
      // (1-z): a_k = q_k - q_{k-1}
      q[d - 1] = -a[d];
      for (std::uint32_t k = d - 1; k >= 1; --k) q[k - 1] = q[k] - a[k];
      if (!(a[0] - q[0]).is_zero()) return std::nullopt;
    }
    for (std::uint32_t k = 0; k < d; ++k) {
      if (!q[k].is_zero()) out[skey(ey, k)] = q[k];
    }
  }
  return out;
}

// out += c * y * s  (multiplies by the scalar c and shifts ey by one)
void slice_add_scaled_y(Slice& out, const Slice& s, const GaussianRational& c) {
  for (const auto& [key, v] : s) {
    const std::uint32_t ey = static_cast<std::uint32_t>(key >> 20);
    const std::uint32_t ez = static_cast<std::uint32_t>(key & 0xFFFFF);
    auto [it, inserted] = out.try_emplace(skey(ey + 1, ez), c * v);
    if (!inserted) {
      it->second += c * v;
      if (it->second.is_zero()) out.erase(it);
    }
  }
}

SphereElement assemble(const Slice& x0, const Slice& x1) {
  std::vector<SphereElement::Term> ts;
  ts.reserve(x0.size() + x1.size());
  for (const auto& [key, c] : x0) {
    if (!c.is_zero())
      ts.push_back({Monomial{0, static_cast<std::uint32_t>(key >> 20),
                             static_cast<std::uint32_t>(key & 0xFFFFF)},
                    c});
  }
  for (const auto& [key, c] : x1) {
    if (!c.is_zero())
      ts.push_back({Monomial{1, static_cast<std::uint32_t>(key >> 20),
                             static_cast<std::uint32_t>(key & 0xFFFFF)},
                    c});
  }
  std::sort(ts.begin(), ts.end(),
            [](const auto& a, const auto& b) { return graded_lex_greater(a.mono, b.mono); });
  return SphereElement::from_sorted_terms(std::move(ts));
}

}  // namespace

std::optional<SphereElement> try_divide(const SphereElement& p, SphereDivisor d) {
  if (p.is_zero()) return SphereElement::zero();
  Slice x0, x1;
  split_by_x(p, x0, x1);

  if (d == SphereDivisor::OnePlusZ || d == SphereDivisor::OneMinusZ) {
    const int sign = (d == SphereDivisor::OnePlusZ) ? +1 : -1;
    // Multiplication by 1 +- z creates no x^2, so the two x-slices divide
    // independently as plain bivariate polynomials in (y, z).
    auto q0 = x0.empty() ? std::make_optional(Slice{}) : slice_divide_one_pm_z(x0, sign);
    if (!q0) return std::nullopt;
    auto q1 = x1.empty() ? std::make_optional(Slice{}) : slice_divide_one_pm_z(x1, sign);
    if (!q1) return std::nullopt;
    return assemble(*q0, *q1);
  }

  // For (x + s*iy), s = +-1: writing p = p0 + x*p1 and h = h0 + x*h1,
  //   (x + s*iy)*h = [s*iy*h0 + (1-y^2-z^2)*h1] + x*[h0 + s*iy*h1]
  // so h1 = (p0 - s*iy*p1) / (1 - z^2) and h0 = p1 - s*iy*h1.
  const GaussianRational si = (d == SphereDivisor::XPlusIY) ? GaussianRational::unit_i()
                                                            : -GaussianRational::unit_i();
  Slice t = x0;
  slice_add_scaled_y(t, x1, -si);
  std::optional<Slice> h1 = std::make_optional(std::move(t));
  if (!h1->empty()) {
    h1 = slice_divide_one_pm_z(*h1, -1);
    if (!h1) return std::nullopt;
    if (!h1->empty()) {
      h1 = slice_divide_one_pm_z(*h1, +1);
      if (!h1) return std::nullopt;
    }
  }
  Slice h0 = x1;
  slice_add_scaled_y(h0, *h1, -si);
  return assemble(h0, *h1);
}

}  // namespace sphereforms
