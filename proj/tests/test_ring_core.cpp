#include <doctest.h>

#include <random>

#include "sphereforms/errors.hpp"
#include "sphereforms/free_polynomial.hpp"
#include "sphereforms/grammar.hpp"
#include "sphereforms/sphere_element.hpp"
#include "support/generators.hpp"

using namespace sphereforms;
using testsupport::random_raw_polynomial;
using testsupport::random_sphere_element;

namespace {

const SphereElement x = SphereElement::variable_x();
const SphereElement y = SphereElement::variable_y();
const SphereElement z = SphereElement::variable_z();
const GaussianRational I = GaussianRational::unit_i();

FreePolynomial sphere_relation() {
  // x^2 + y^2 + z^2 - 1
  FreePolynomial r = FreePolynomial::zero({"x", "y", "z"});
  r.add_term({2, 0, 0}, GaussianRational(1));
  r.add_term({0, 2, 0}, GaussianRational(1));
  r.add_term({0, 0, 2}, GaussianRational(1));
  r.add_term({0, 0, 0}, GaussianRational(-1));
  return r;
}

}  // namespace

TEST_CASE("gaussian rational basics") {
  const GaussianRational q(rational(3, 6), rational(-2, 4));
  CHECK(q.re == rational(1, 2));
  CHECK(q.im == rational(-1, 2));
  CHECK(q.conj().conj() == q);
  CHECK(q.norm2() == rational(1, 2));
  CHECK((q * q.inverse()).is_one());
  CHECK(GaussianRational(0).is_zero());
  CHECK((I * I) == GaussianRational(-1));
  CHECK_THROWS_AS(GaussianRational(0).inverse(), DomainError);
}

TEST_CASE("reduce applies the x^2 rewrite") {
  // x^2 -> 1 - y^2 - z^2
  CHECK(x * x == SphereElement::one() - y * y - z * z);
  // (x+iy)(x-iy) -> 1 - z^2
  CHECK((x + I * y) * (x - I * y) == SphereElement::one() - z * z);
  // the relation itself maps to zero, and so does any multiple
  const SphereElement rel = SphereElement::reduce(sphere_relation());
  CHECK(rel.is_zero());
  std::mt19937_64 rng(7);
  for (int k = 0; k < 20; ++k) {
    const FreePolynomial p = random_raw_polynomial(rng);
    CHECK(SphereElement::reduce(sphere_relation() * p).is_zero());
  }
}

TEST_CASE("normal form keeps ex <= 1") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    const SphereElement p = random_sphere_element(rng);
    for (const auto& t : p.terms()) CHECK(t.mono.ex <= 1);
  }
  const SphereElement big = SphereElement::monomial({7, 1, 2}, GaussianRational(1));
  for (const auto& t : big.terms()) CHECK(t.mono.ex <= 1);
}

TEST_CASE("ring arithmetic identities") {
  CHECK((SphereElement::one() + z) * (SphereElement::one() - z) ==
        SphereElement::one() - z * z);
  CHECK(pow(x + I * y, 0) == SphereElement::one());
  CHECK(pow(x + I * y, 3) == (x + I * y) * (x + I * y) * (x + I * y));
  CHECK((x - x).is_zero());
  CHECK((GaussianRational(0) * x).is_zero());
}

TEST_CASE("confluence of reduction on random products and sums") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 1000; ++k) {
    const FreePolynomial p = random_raw_polynomial(rng);
    const FreePolynomial q = random_raw_polynomial(rng);
    const SphereElement rp = SphereElement::reduce(p);
    const SphereElement rq = SphereElement::reduce(q);
    CHECK(SphereElement::reduce(p * q) == rp * rq);
    CHECK(SphereElement::reduce(p + q) == rp + rq);
  }
}

TEST_CASE("normal form uniqueness against ideal shifts") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 200; ++k) {
    const FreePolynomial p = random_raw_polynomial(rng);
    const FreePolynomial r = random_raw_polynomial(rng, 4, 4);
    CHECK(SphereElement::reduce(p + r * sphere_relation()) == SphereElement::reduce(p));
    // shifting by a non-member changes the normal form
    CHECK(SphereElement::reduce(p) !=
          SphereElement::reduce(p) + SphereElement::one());
  }
}

TEST_CASE("conjugation is a ring involution fixing x, y, z") {
  CHECK(conj(x + I * y) == x - I * y);
  CHECK(conj(SphereElement::one() - z) == SphereElement::one() - z);
  CHECK(conj(conj(x - I * y)) == x - I * y);
  std::mt19937_64 rng(19);
  for (int k = 0; k < 200; ++k) {
    const SphereElement p = random_sphere_element(rng);
    const SphereElement q = random_sphere_element(rng);
    CHECK(conj(conj(p)) == p);
    CHECK(conj(p * q) == conj(p) * conj(q));
    CHECK(conj(p + q) == conj(p) + conj(q));
  }
}

TEST_CASE("exact division by the distinguished divisors") {
  const SphereElement one = SphereElement::one();

  auto q = try_divide(one - z * z, SphereDivisor::OnePlusZ);
  REQUIRE(q.has_value());
  CHECK(*q == one - z);

  // x^2 + y^2 = (1-z)(1+z) holds only through the sphere relation
  q = try_divide(x * x + y * y, SphereDivisor::OneMinusZ);
  REQUIRE(q.has_value());
  CHECK(*q == one + z);

  // (1-z) = (x+iy)(x-iy)/(1+z): so (x+iy) divides (1-z)(1+z)
  q = try_divide(one - z * z, SphereDivisor::XPlusIY);
  REQUIRE(q.has_value());
  CHECK(*q == x - I * y);

  CHECK_FALSE(try_divide(x + y, SphereDivisor::XPlusIY).has_value());
  CHECK_FALSE(try_divide(one, SphereDivisor::OnePlusZ).has_value());
  CHECK_FALSE(try_divide(one + z, SphereDivisor::OneMinusZ).has_value());
}

TEST_CASE("division round trip on random multiples") {
  std::mt19937_64 rng(23);
  for (SphereDivisor d : {SphereDivisor::OnePlusZ, SphereDivisor::OneMinusZ,
                          SphereDivisor::XPlusIY, SphereDivisor::XMinusIY}) {
    for (int k = 0; k < 100; ++k) {
      const SphereElement h = random_sphere_element(rng, 5, 6);
      const SphereElement p = divisor_element(d) * h;
      const auto q = try_divide(p, d);
      REQUIRE(q.has_value());
      CHECK(divisor_element(d) * *q == p);
    }
  }
}

TEST_CASE("free polynomial contexts do not mix") {
  const FreePolynomial a = FreePolynomial::variable({"x0", "x1"}, "x0");
  const FreePolynomial b = FreePolynomial::variable({"y0", "y1"}, "y0");
  CHECK_THROWS_AS(a * b, VariableMismatch);
  CHECK_THROWS_AS(a + b, VariableMismatch);
  CHECK_THROWS_AS(SphereElement::reduce(a), VariableMismatch);
}
