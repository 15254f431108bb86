#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

// Independent oracles used by tests. These deliberately avoid the library's
// polynomial types and algorithms: everything here works on raw coefficient
// vectors so that agreement with the implementation is meaningful evidence.

namespace sphereforms::testsupport {

/// Minimal-degree cofactor P_n from the linear system
///   (1+z)^n P(z) = 1 (mod (1-z)^n),
/// solved by undetermined coefficients in the basis u^k, u = 1 - z. In that
/// basis (1+z)^n = (2-u)^n, and multiplication by it mod u^n is a lower
/// triangular system solved by forward substitution. Returns the coefficients
/// of P in the standard z basis, constant term first.
inline std::vector<mpq_class> bezout_P_by_linear_solve(int n) {
  const auto un = static_cast<unsigned>(n);
  // a[j] = coefficient of u^j in (2-u)^n, computed by repeated multiplication.
  std::vector<mpq_class> a{1};
  for (unsigned k = 0; k < un; ++k) {
    std::vector<mpq_class> next(a.size() + 1, mpq_class(0));
    for (std::size_t j = 0; j < a.size(); ++j) {
      next[j] += 2 * a[j];
      next[j + 1] -= a[j];
    }
    a = std::move(next);
  }
  // Forward substitution: sum_{j<=k} a[j] * c[k-j] = (k == 0 ? 1 : 0).
  std::vector<mpq_class> c(un, mpq_class(0));
  for (unsigned k = 0; k < un; ++k) {
    mpq_class rhs = (k == 0) ? 1 : 0;
    for (unsigned j = 1; j <= k; ++j) rhs -= a[j] * c[k - j];
    c[k] = rhs / a[0];
    c[k].canonicalize();
  }
  // Convert P(u) = sum c[k] (1-z)^k to the z basis via explicit binomials.
  std::vector<mpq_class> p(un, mpq_class(0));
  for (unsigned k = 0; k < un; ++k) {
    // (1-z)^k = sum_j C(k,j) (-1)^j z^j
    mpz_class binom = 1;
    for (unsigned j = 0; j <= k; ++j) {
      mpq_class term = c[k] * binom;
      if (j % 2 == 1) term = -term;
      p[j] += term;
      binom = binom * (k - j) / (j + 1);
    }
  }
  for (auto& v : p) v.canonicalize();
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  return p;
}

}  // namespace sphereforms::testsupport
