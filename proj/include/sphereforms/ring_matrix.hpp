#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "sphereforms/errors.hpp"
#include "sphereforms/grammar.hpp"
#include "sphereforms/localized.hpp"
#include "sphereforms/sphere_element.hpp"

namespace sphereforms {

/// Which coordinate ring a matrix lives over: the whole sphere, one of the
/// charts where 1+z (resp. 1-z) is inverted, or their overlap.
enum class Chart { Global, Uplus, Uminus, Overlap };

inline std::string chart_name(Chart c) {
  switch (c) {
    case Chart::Global: return "Global";
    case Chart::Uplus: return "Uplus";
    case Chart::Uminus: return "Uminus";
    case Chart::Overlap: return "Overlap";
  }
  throw DomainError("chart_name: bad chart");
}

inline std::pair<std::uint32_t, std::uint32_t> denom_exponents(const SphereElement&) {
  return {0, 0};
}
inline std::pair<std::uint32_t, std::uint32_t> denom_exponents(const LocalizedElement& u) {
  return {u.denom_plus_exp(), u.denom_minus_exp()};
}

inline Chart merge_charts(Chart a, Chart b) {
  if (a == b) return a;
  if (a == Chart::Global) return b;
  if (b == Chart::Global) return a;
  return Chart::Overlap;
}

/// Dense square matrix (2x2 or 3x3) over a commutative-ring element type,
/// tagged with the chart its entries are allowed to live on.
template <class Element>
class RingMatrix {
 public:
  RingMatrix(int size, Chart chart, std::vector<Element> entries)
      : size_(size), chart_(chart), e_(std::move(entries)) {
    if (size_ != 2 && size_ != 3) throw DomainError("RingMatrix: size must be 2 or 3");
    if (e_.size() != static_cast<std::size_t>(size_ * size_)) {
      throw DomainError("RingMatrix: wrong number of entries");
    }
    for (const auto& entry : e_) {
      const auto [a, b] = denom_exponents(entry);
      const bool ok = (chart_ == Chart::Overlap) || (chart_ == Chart::Uplus && b == 0) ||
                      (chart_ == Chart::Uminus && a == 0) ||
                      (chart_ == Chart::Global && a == 0 && b == 0);
      if (!ok) throw DomainError("RingMatrix: entry denominator not allowed on chart");
    }
  }

  static RingMatrix identity(int size, Chart chart = Chart::Global) {
    std::vector<Element> e(static_cast<std::size_t>(size * size), Element());
    for (int k = 0; k < size; ++k) e[static_cast<std::size_t>(k * size + k)] = one_element();
    return RingMatrix(size, chart, std::move(e));
  }

  static RingMatrix diagonal(Chart chart, std::vector<Element> diag) {
    const int n = static_cast<int>(diag.size());
    std::vector<Element> e(static_cast<std::size_t>(n * n), Element());
    for (int k = 0; k < n; ++k) e[static_cast<std::size_t>(k * n + k)] = std::move(diag[k]);
    return RingMatrix(n, chart, std::move(e));
  }

  int size() const { return size_; }
  Chart chart() const { return chart_; }
  const Element& operator()(int r, int c) const { return e_[index(r, c)]; }

  /// Same values retagged; the target chart must admit the entries.
  RingMatrix with_chart(Chart chart) const { return RingMatrix(size_, chart, e_); }

  /// Value of one entry replaced; used by perturbation tests.
  RingMatrix with_entry(int r, int c, Element v) const {
    std::vector<Element> e = e_;
    e[index(r, c)] = std::move(v);
    return RingMatrix(size_, chart_, std::move(e));
  }

  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    if (a.size_ != b.size_) throw DomainError("RingMatrix: size mismatch");
    const int n = a.size_;
    std::vector<Element> e;
    e.reserve(static_cast<std::size_t>(n * n));
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        Element acc = a(r, 0) * b(0, c);
        for (int k = 1; k < n; ++k) acc = acc + a(r, k) * b(k, c);
        e.push_back(std::move(acc));
      }
    }
    return RingMatrix(n, merge_charts(a.chart_, b.chart_), std::move(e));
  }

  friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
    if (a.size_ != b.size_) return false;
    for (std::size_t k = 0; k < a.e_.size(); ++k) {
      if (a.e_[k] != b.e_[k]) return false;
    }
    return true;
  }
  friend bool operator!=(const RingMatrix& a, const RingMatrix& b) { return !(a == b); }

  static Element one_element();

 private:
  std::size_t index(int r, int c) const {
    if (r < 0 || c < 0 || r >= size_ || c >= size_) throw DomainError("RingMatrix: bad index");
    return static_cast<std::size_t>(r * size_ + c);
  }

  int size_;
  Chart chart_;
  std::vector<Element> e_;
};

template <>
inline SphereElement RingMatrix<SphereElement>::one_element() {
  return SphereElement::one();
}
template <>
inline LocalizedElement RingMatrix<LocalizedElement>::one_element() {
  return LocalizedElement::one();
}

template <class Element>
Element det(const RingMatrix<Element>& m) {
  if (m.size() == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

template <class Element>
RingMatrix<Element> adjugate(const RingMatrix<Element>& m) {
  if (m.size() == 2) {
    return RingMatrix<Element>(2, m.chart(),
                               {m(1, 1), -m(0, 1),  //
                                -m(1, 0), m(0, 0)});
  }
  auto cof = [&m](int r0, int c0, int r1, int c1) {
    return m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
  };
  // adj(m)(i, j) = cofactor(j, i)
  return RingMatrix<Element>(3, m.chart(),
                             {cof(1, 1, 2, 2), -cof(0, 1, 2, 2), cof(0, 1, 1, 2),
                              -cof(1, 0, 2, 2), cof(0, 0, 2, 2), -cof(0, 0, 1, 2),
                              cof(1, 0, 2, 1), -cof(0, 0, 2, 1), cof(0, 0, 1, 1)});
}

/// Entrywise coefficient conjugation (x, y, z fixed).
template <class Element>
RingMatrix<Element> conj(const RingMatrix<Element>& m) {
  std::vector<Element> e;
  e.reserve(static_cast<std::size_t>(m.size() * m.size()));
  for (int r = 0; r < m.size(); ++r) {
    for (int c = 0; c < m.size(); ++c) e.push_back(conj(m(r, c)));
  }
  return RingMatrix<Element>(m.size(), m.chart(), std::move(e));
}

/// Inverse of a matrix with determinant exactly 1 (the adjugate); throws
/// NonUnitDeterminant otherwise.
template <class Element>
RingMatrix<Element> inverse_unit_det(const RingMatrix<Element>& m) {
  if (!(det(m) == RingMatrix<Element>::one_element())) {
    throw NonUnitDeterminant("inverse requires determinant 1");
  }
  return adjugate(m);
}

/// Reinterpret a denominator-free matrix over the localized ring.
inline RingMatrix<LocalizedElement> to_localized(const RingMatrix<SphereElement>& m,
                                                 Chart chart = Chart::Global) {
  std::vector<LocalizedElement> e;
  e.reserve(static_cast<std::size_t>(m.size() * m.size()));
  for (int r = 0; r < m.size(); ++r) {
    for (int c = 0; c < m.size(); ++c) e.emplace_back(m(r, c));
  }
  return RingMatrix<LocalizedElement>(m.size(), chart, std::move(e));
}

/// Rows separated by "; ", entries by ", ", each entry in the element grammar.
template <class Element>
std::string matrix_text(const RingMatrix<Element>& m) {
  std::string out;
  for (int r = 0; r < m.size(); ++r) {
    if (r) out += "; ";
    for (int c = 0; c < m.size(); ++c) {
      if (c) out += ", ";
      out += serialize(m(r, c));
    }
  }
  return out;
}

}  // namespace sphereforms
