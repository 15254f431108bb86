#include <doctest.h>

#include <random>

#include "sphereforms/errors.hpp"
#include "sphereforms/localized.hpp"
#include "support/generators.hpp"

using namespace sphereforms;
using testsupport::random_sphere_element;

namespace {
const SphereElement x = SphereElement::variable_x();
const SphereElement y = SphereElement::variable_y();
const SphereElement z = SphereElement::variable_z();
const GaussianRational I = GaussianRational::unit_i();
const SphereElement one = SphereElement::one();
}  // namespace

TEST_CASE("canonical representative strips denominator factors") {
  // (1-z^2)/(1+z) = 1-z
  const LocalizedElement u(one - z * z, 1, 0);
  CHECK(u == LocalizedElement(one - z));
  CHECK(u.denom_plus_exp() == 0);
  CHECK(u.denom_minus_exp() == 0);

  // (x+iy)(x-iy)/((1+z)^2 (1-z)^2) = 1/((1+z)(1-z))
  const LocalizedElement v((x + I * y) * (x - I * y), 2, 2);
  CHECK(v.denom_plus_exp() == 1);
  CHECK(v.denom_minus_exp() == 1);
  CHECK(v.num() == one);
}

TEST_CASE("localized equality is an equivalence relation") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<std::uint32_t> e(0, 2);
  for (int k = 0; k < 100; ++k) {
    const SphereElement n = random_sphere_element(rng, 4, 5);
    const std::uint32_t a = e(rng), b = e(rng);
    const LocalizedElement u(n, a, b);
    // reflexive, and invariant under common denominator inflation
    const std::uint32_t da = e(rng), db = e(rng);
    const LocalizedElement v(n * denominator_element(da, db), a + da, b + db);
    CHECK(u == u);
    CHECK(u == v);
    CHECK(v == u);
    // transitivity through a third inflation
    const LocalizedElement w(n * denominator_element(da + 1, db), a + da + 1, b + db);
    CHECK(v == w);
    CHECK(u == w);
  }
}

TEST_CASE("field axioms in the localization") {
  const LocalizedElement u(one - z * z, 1, 0);
  const LocalizedElement w(x + I * y, 0, 2);
  CHECK(u * w == w * u);
  CHECK(u + w == w + u);
  CHECK((u + (-u)).is_zero());
  CHECK(u * LocalizedElement::one() == u);
}

TEST_CASE("loc_inv of the overlap units") {
  // 1/(x+iy) = (x-iy)/((1+z)(1-z))
  const LocalizedElement inv = loc_inv(LocalizedElement(x + I * y));
  CHECK(inv.num() == x - I * y);
  CHECK(inv.denom_plus_exp() == 1);
  CHECK(inv.denom_minus_exp() == 1);

  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::uint32_t> e(0, 3);
  std::uniform_int_distribution<int> scalar(1, 9);
  for (int k = 0; k < 50; ++k) {
    const GaussianRational gamma(Rational(scalar(rng)), Rational(scalar(rng)));
    const SphereElement num =
        gamma * (pow(one + z, e(rng)) * pow(one - z, e(rng)) * pow(x + I * y, e(rng)) *
                 pow(x - I * y, e(rng)));
    const LocalizedElement u(num, e(rng), e(rng));
    CHECK(u * loc_inv(u) == LocalizedElement::one());
  }
}

TEST_CASE("loc_inv rejects non-units") {
  CHECK_THROWS_AS(loc_inv(LocalizedElement(x + y)), NotAUnit);
  CHECK_THROWS_AS(loc_inv(LocalizedElement::zero()), NotAUnit);
  CHECK_THROWS_AS(loc_inv(LocalizedElement(one + x)), NotAUnit);
}

TEST_CASE("conjugation commutes with localization") {
  const LocalizedElement u(x + I * y, 2, 1);
  CHECK(conj(conj(u)) == u);
  CHECK(conj(u) == LocalizedElement(x - I * y, 2, 1));
}
