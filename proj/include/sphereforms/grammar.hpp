#pragma once

#include <string>
#include <vector>

#include "sphereforms/free_polynomial.hpp"
#include "sphereforms/localized.hpp"
#include "sphereforms/rational_poly.hpp"
#include "sphereforms/sphere_element.hpp"

namespace sphereforms {

// Canonical text form shared by every element type. Terms are emitted in
// descending graded-lex order (x > y > z), joined by " + " / " - "; exponent 1
// is elided and exponent 0 omits the variable; fractional and complex
// coefficients attached to a monomial are parenthesized. This rendering is the
// golden-file format: parse(serialize(p)) == p and serialization is bit-stable.

std::string serialize(const GaussianRational& c);
std::string serialize(const SphereElement& p);
std::string serialize(const FreePolynomial& p);
std::string serialize(const RationalPoly& p);
std::string serialize(const LocalizedElement& u);

/// Parse in a declared variable context ('i' is always the imaginary unit).
FreePolynomial parse_polynomial(const std::string& text, std::vector<std::string> variables);

/// Parse in {x, y, z} and reduce to normal form.
SphereElement parse_sphere_element(const std::string& text);

/// Accepts "elem" or "(elem) / (denominator)" with denominator a product of
/// (1+z) and (1-z) powers.
LocalizedElement parse_localized(const std::string& text);

/// Univariate in z with rational coefficients.
RationalPoly parse_rational_poly(const std::string& text);

}  // namespace sphereforms
