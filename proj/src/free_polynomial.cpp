#include "sphereforms/free_polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "sphereforms/errors.hpp"

namespace sphereforms {

bool FreePolynomial::GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto deg = [](const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
  };
  const std::uint64_t da = deg(a), db = deg(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

FreePolynomial::FreePolynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {
  for (const auto& v : vars_) {
    if (v == "i") throw DomainError("FreePolynomial: 'i' is reserved for the imaginary unit");
  }
}

FreePolynomial FreePolynomial::constant(std::vector<std::string> variables, GaussianRational c) {
  FreePolynomial p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

FreePolynomial FreePolynomial::variable(std::vector<std::string> variables,
                                        const std::string& name) {
  FreePolynomial p(std::move(variables));
  auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
  if (it == p.vars_.end()) throw VariableMismatch("unknown variable: " + name);
  Exponents e(p.vars_.size(), 0);
  e[static_cast<std::size_t>(it - p.vars_.begin())] = 1;
  p.add_term(e, GaussianRational(1));
  return p;
}

void FreePolynomial::add_term(const Exponents& exps, const GaussianRational& c) {
  if (exps.size() != vars_.size()) throw VariableMismatch("exponent vector has wrong arity");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void FreePolynomial::check_context(const FreePolynomial& other) const {
  if (vars_ != other.vars_) {
    throw VariableMismatch("operands live in different variable contexts");
  }
}

FreePolynomial FreePolynomial::operator-() const {
  FreePolynomial r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

FreePolynomial operator+(const FreePolynomial& a, const FreePolynomial& b) {
  a.check_context(b);
  FreePolynomial r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

FreePolynomial operator-(const FreePolynomial& a, const FreePolynomial& b) {
  a.check_context(b);
  FreePolynomial r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

FreePolynomial operator*(const FreePolynomial& a, const FreePolynomial& b) {
  a.check_context(b);
  FreePolynomial r(a.vars_);
  FreePolynomial::Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

FreePolynomial operator*(const GaussianRational& c, const FreePolynomial& p) {
  FreePolynomial r(p.vars_);
  if (c.is_zero()) return r;
  for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
  return r;
}

bool operator==(const FreePolynomial& a, const FreePolynomial& b) {
  a.check_context(b);
  return a.terms_ == b.terms_;
}

FreePolynomial pow(const FreePolynomial& p, unsigned long e) {
  FreePolynomial acc = FreePolynomial::constant(p.variables(), GaussianRational(1));
  FreePolynomial base = p;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

}  // namespace sphereforms
