#pragma once

#include <map>
#include <string>
#include <vector>

#include "sphereforms/rational.hpp"

namespace sphereforms {

/// Sparse polynomial over Q[i] in a declared variable list, no quotient relation.
///
/// Two polynomials interoperate only if their variable lists are identical
/// (same names, same order); mixing contexts throws VariableMismatch. Terms are
/// keyed by exponent vectors under descending graded-lex on the declared order.
class FreePolynomial {
 public:
  using Exponents = std::vector<std::uint32_t>;

  struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, GaussianRational, GradedLexGreater>;

  explicit FreePolynomial(std::vector<std::string> variables);

  static FreePolynomial zero(std::vector<std::string> variables) {
    return FreePolynomial(std::move(variables));
  }
  static FreePolynomial constant(std::vector<std::string> variables, GaussianRational c);
  /// The variable `name`, which must be in the context.
  static FreePolynomial variable(std::vector<std::string> variables, const std::string& name);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& exps, const GaussianRational& c);

  FreePolynomial operator-() const;
  friend FreePolynomial operator+(const FreePolynomial& a, const FreePolynomial& b);
  friend FreePolynomial operator-(const FreePolynomial& a, const FreePolynomial& b);
  friend FreePolynomial operator*(const FreePolynomial& a, const FreePolynomial& b);
  friend FreePolynomial operator*(const GaussianRational& c, const FreePolynomial& p);
  friend bool operator==(const FreePolynomial& a, const FreePolynomial& b);
  friend bool operator!=(const FreePolynomial& a, const FreePolynomial& b) { return !(a == b); }

 private:
  void check_context(const FreePolynomial& other) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

FreePolynomial pow(const FreePolynomial& p, unsigned long e);

}  // namespace sphereforms
