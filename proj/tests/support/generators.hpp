#pragma once

#include <random>

#include "sphereforms/free_polynomial.hpp"
#include "sphereforms/sphere_element.hpp"

namespace sphereforms::testsupport {

/// Random raw polynomial in x, y, z: up to `max_terms` monomials of total
/// degree <= max_degree with coefficients in [-9,9] + [-9,9]i.
inline FreePolynomial random_raw_polynomial(std::mt19937_64& rng, unsigned max_degree = 6,
                                            unsigned max_terms = 8) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  FreePolynomial p = FreePolynomial::zero({"x", "y", "z"});
  const unsigned terms = nterms(rng);
  for (unsigned t = 0; t < terms; ++t) {
    const unsigned d = deg(rng);
    std::uniform_int_distribution<unsigned> split(0, d);
    const unsigned ex = split(rng);
    std::uniform_int_distribution<unsigned> split2(0, d - ex);
    const unsigned ey = split2(rng);
    const unsigned ez = d - ex - ey;
    p.add_term({ex, ey, ez}, GaussianRational(Rational(coeff(rng)), Rational(coeff(rng))));
  }
  return p;
}

inline SphereElement random_sphere_element(std::mt19937_64& rng, unsigned max_degree = 6,
                                           unsigned max_terms = 8) {
  return SphereElement::reduce(random_raw_polynomial(rng, max_degree, max_terms));
}

}  // namespace sphereforms::testsupport
