#include <doctest.h>

#include <random>

#include "sphereforms/errors.hpp"
#include "sphereforms/grammar.hpp"
#include "sphereforms/localized.hpp"
#include "support/generators.hpp"

using namespace sphereforms;
using testsupport::random_sphere_element;

TEST_CASE("serialization fixed points") {
  const SphereElement x = SphereElement::variable_x();
  const SphereElement y = SphereElement::variable_y();
  const SphereElement z = SphereElement::variable_z();
  const GaussianRational I = GaussianRational::unit_i();

  CHECK(serialize(SphereElement::zero()) == "0");
  CHECK(serialize(SphereElement::one()) == "1");
  CHECK(serialize(x - I * y) == "x - i*y");
  CHECK(serialize(-x - I * y) == "-x - i*y");
  CHECK(serialize(GaussianRational(-2) * z) == "-2*z");
  CHECK(serialize(GaussianRational(rational(-1, 2)) * z) == "(-1/2)*z");
  CHECK(serialize(I * z * z) == "i*z^2");
  CHECK(serialize(x * y * z) == "x*y*z");
  CHECK(serialize(SphereElement::constant(GaussianRational(rational(1, 2), rational(3, 4)))) ==
        "(1/2 + 3/4*i)");
  // graded-lex order, highest degree first, x > y > z
  CHECK(serialize(z + y + x + SphereElement::one()) == "x + y + z + 1");
}

TEST_CASE("bezout cofactor prints in golden form") {
  // P_2 = (2 - z)/4
  const RationalPoly p2(std::vector<Rational>{rational(1, 2), rational(-1, 4)});
  CHECK(serialize(p2) == "(-1/4)*z + 1/2");
  CHECK(serialize(RationalPoly::zero()) == "0");
}

TEST_CASE("parse inverts serialize on simple inputs") {
  CHECK(parse_sphere_element("0").is_zero());
  const std::string src = "i*z^2";
  CHECK(serialize(parse_sphere_element(src)) == src);
  // parsing normalizes: x^2 is rewritten
  CHECK(parse_sphere_element("x^2") == parse_sphere_element("1 - y^2 - z^2"));
}

TEST_CASE("round trip on random elements") {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 300; ++k) {
    const SphereElement p = random_sphere_element(rng);
    CHECK(parse_sphere_element(serialize(p)) == p);
  }
}

TEST_CASE("round trip on random localized elements") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::uint32_t> e(0, 3);
  for (int k = 0; k < 100; ++k) {
    const LocalizedElement u(random_sphere_element(rng, 4, 5), e(rng), e(rng));
    const LocalizedElement back = parse_localized(serialize(u));
    CHECK(back == u);
    CHECK(back.denom_plus_exp() == u.denom_plus_exp());
    CHECK(back.denom_minus_exp() == u.denom_minus_exp());
  }
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_sphere_element("x +"), ParseError);
  CHECK_THROWS_AS(parse_sphere_element("w"), ParseError);
  CHECK_THROWS_AS(parse_sphere_element("(x"), ParseError);
  CHECK_THROWS_AS(parse_sphere_element("1/0"), ParseError);
  CHECK_THROWS_AS(parse_sphere_element("x $ y"), ParseError);
  try {
    parse_sphere_element("x + $");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_localized("(x) / (x + y)"), ParseError);
}

TEST_CASE("rational poly parse round trip") {
  const RationalPoly p(std::vector<Rational>{rational(1, 2), rational(0), rational(-3, 7)});
  CHECK(parse_rational_poly(serialize(p)) == p);
  CHECK_THROWS_AS(parse_rational_poly("x"), ParseError);
  CHECK_THROWS_AS(parse_rational_poly("i*z"), ParseError);
}
