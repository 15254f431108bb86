#include "sphereforms/grammar.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "sphereforms/errors.hpp"

namespace sphereforms {

namespace {

std::string rat_str(const Rational& q) { return q.get_str(); }

Rational abs_rat(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

// Unsigned imaginary magnitude: "i", "3*i", "1/2*i".
std::string imag_mag_str(const Rational& im_abs) {
  if (im_abs == 1) return "i";
  return rat_str(im_abs) + "*i";
}

}  // namespace

std::string serialize(const GaussianRational& c) {
  if (c.is_zero()) return "0";
  if (c.is_real()) return rat_str(c.re);
  if (c.is_imaginary()) {
    std::string mag = imag_mag_str(abs_rat(c.im));
    return sgn(c.im) < 0 ? "-" + mag : mag;
  }
  // Mixed coefficients always carry parentheses.
  return "(" + rat_str(c.re) + (sgn(c.im) > 0 ? " + " : " - ") + imag_mag_str(abs_rat(c.im)) + ")";
}

namespace {

// One term of any element type, flattened for rendering.
struct TermView {
  std::vector<std::pair<std::string, std::uint32_t>> mono;  // (variable, exponent > 0)
  GaussianRational coeff;
};

std::string mono_str(const TermView& t) {
  std::string out;
  for (const auto& [var, e] : t.mono) {
    if (!out.empty()) out += "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// Renders coefficient * monomial with the coefficient's own sign.
std::string term_str(const TermView& t) {
  if (t.mono.empty()) return serialize(t.coeff);
  const std::string m = mono_str(t);
  const GaussianRational& c = t.coeff;
  if (c.is_real() && c.re == 1) return m;
  if (c.is_real() && c.re == -1) return "-" + m;
  std::string a = serialize(c);
  if (a.find('/') != std::string::npos && a.front() != '(') a = "(" + a + ")";
  return a + "*" + m;
}

std::string render_terms(const std::vector<TermView>& terms) {
  if (terms.empty()) return "0";
  std::string out = term_str(terms.front());
  for (std::size_t k = 1; k < terms.size(); ++k) {
    TermView mag = terms[k];
    bool negative = false;
    if (mag.coeff.is_real()) {
      negative = sgn(mag.coeff.re) < 0;
      if (negative) mag.coeff.re = -mag.coeff.re;
    } else if (mag.coeff.is_imaginary()) {
      negative = sgn(mag.coeff.im) < 0;
      if (negative) mag.coeff.im = -mag.coeff.im;
    }
    out += negative ? " - " : " + ";
    out += term_str(mag);
  }
  return out;
}

TermView sphere_term_view(const SphereElement::Term& t) {
  TermView v;
  if (t.mono.ex) v.mono.emplace_back("x", t.mono.ex);
  if (t.mono.ey) v.mono.emplace_back("y", t.mono.ey);
  if (t.mono.ez) v.mono.emplace_back("z", t.mono.ez);
  v.coeff = t.coeff;
  return v;
}

}  // namespace

std::string serialize(const SphereElement& p) {
  std::vector<TermView> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) terms.push_back(sphere_term_view(t));
  return render_terms(terms);
}

std::string serialize(const FreePolynomial& p) {
  std::vector<TermView> terms;
  terms.reserve(p.terms().size());
  for (const auto& [e, c] : p.terms()) {
    TermView v;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k]) v.mono.emplace_back(p.variables()[k], e[k]);
    }
    v.coeff = c;
    terms.push_back(std::move(v));
  }
  return render_terms(terms);
}

std::string serialize(const RationalPoly& p) {
  std::vector<TermView> terms;
  for (long k = p.degree(); k >= 0; --k) {
    const Rational c = p.coeff(static_cast<std::size_t>(k));
    if (sgn(c) == 0) continue;
    TermView v;
    if (k > 0) v.mono.emplace_back("z", static_cast<std::uint32_t>(k));
    v.coeff = GaussianRational(c);
    terms.push_back(std::move(v));
  }
  return render_terms(terms);
}

std::string serialize(const LocalizedElement& u) {
  if (u.is_global()) return serialize(u.num());
  std::string denom;
  if (u.denom_plus_exp()) {
    denom += "(1 + z)";
    if (u.denom_plus_exp() != 1) denom += "^" + std::to_string(u.denom_plus_exp());
  }
  if (u.denom_minus_exp()) {
    if (!denom.empty()) denom += "*";
    denom += "(1 - z)";
    if (u.denom_minus_exp() != 1) denom += "^" + std::to_string(u.denom_minus_exp());
  }
  return "(" + serialize(u.num()) + ") / (" + denom + ")";
}

// ---------------------------------------------------------------------------
// Parsing: a small recursive-descent parser over a token stream.
//   element := ['-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := base ['^' integer]
//   base    := integer ['/' integer] | 'i' | variable | '(' element ')'
// Whitespace is ignored between tokens.
// ---------------------------------------------------------------------------

namespace {

struct Token {
  enum Kind { Number, Imag, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    const std::size_t start = i_;
    if (i_ >= s_.size()) {
      tok_ = {Token::End, "", start};
      return;
    }
    const char c = s_[i_];
    auto single = [&](Token::Kind k) {
      ++i_;
      tok_ = {k, std::string(1, c), start};
    };
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      tok_ = {Token::Number, s_.substr(i_, j - i_), start};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      std::string word = s_.substr(i_, j - i_);
      i_ = j;
      tok_ = {word == "i" ? Token::Imag : Token::Ident, std::move(word), start};
      return;
    }
    switch (c) {
      case '+': return single(Token::Plus);
      case '-': return single(Token::Minus);
      case '*': return single(Token::Star);
      case '/': return single(Token::Slash);
      case '^': return single(Token::Caret);
      case '(': return single(Token::LParen);
      case ')': return single(Token::RParen);
      default: throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }

  const std::string& s_;
  std::size_t i_ = 0;
  Token tok_{Token::End, "", 0};
};

class Parser {
 public:
  Parser(const std::string& text, std::vector<std::string> variables)
      : lex_(text), vars_(std::move(variables)) {}

  FreePolynomial parse_element() {
    FreePolynomial acc = FreePolynomial::zero(vars_);
    bool negate = false;
    if (lex_.peek().kind == Token::Minus) {
      lex_.take();
      negate = true;
    }
    acc = acc + parse_term(negate);
    while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
      const bool minus = lex_.take().kind == Token::Minus;
      acc = acc + parse_term(minus);
    }
    return acc;
  }

  void expect_end() {
    if (lex_.peek().kind != Token::End) {
      throw ParseError("trailing input after element", lex_.peek().pos);
    }
  }

  bool at_slash() const { return lex_.peek().kind == Token::Slash; }
  void take_slash() { lex_.take(); }

 private:
  FreePolynomial parse_term(bool negate) {
    FreePolynomial p = parse_factor();
    while (lex_.peek().kind == Token::Star) {
      lex_.take();
      p = p * parse_factor();
    }
    return negate ? -p : p;
  }

  FreePolynomial parse_factor() {
    FreePolynomial base = parse_base();
    if (lex_.peek().kind == Token::Caret) {
      lex_.take();
      const Token e = lex_.take();
      if (e.kind != Token::Number) throw ParseError("expected integer exponent", e.pos);
      return pow(base, std::stoul(e.text));
    }
    return base;
  }

  FreePolynomial parse_base() {
    const Token t = lex_.take();
    switch (t.kind) {
      case Token::Number: {
        Rational q(t.text);
        if (lex_.peek().kind == Token::Slash) {
          lex_.take();
          const Token d = lex_.take();
          if (d.kind != Token::Number) throw ParseError("expected denominator", d.pos);
          if (d.text.find_first_not_of('0') == std::string::npos) {
            throw ParseError("zero denominator", d.pos);
          }
          q = Rational(t.text + "/" + d.text);
        }
        q.canonicalize();
        return FreePolynomial::constant(vars_, GaussianRational(q));
      }
      case Token::Imag:
        return FreePolynomial::constant(vars_, GaussianRational::unit_i());
      case Token::Ident: {
        for (const auto& v : vars_) {
          if (v == t.text) return FreePolynomial::variable(vars_, t.text);
        }
        throw ParseError("unknown variable '" + t.text + "'", t.pos);
      }
      case Token::LParen: {
        FreePolynomial inner = parse_element();
        const Token close = lex_.take();
        if (close.kind != Token::RParen) throw ParseError("expected ')'", close.pos);
        return inner;
      }
      default:
        throw ParseError("expected number, variable, 'i' or '('", t.pos);
    }
  }

  Lexer lex_;
  std::vector<std::string> vars_;
};

}  // namespace

FreePolynomial parse_polynomial(const std::string& text, std::vector<std::string> variables) {
  Parser p(text, std::move(variables));
  FreePolynomial r = p.parse_element();
  p.expect_end();
  return r;
}

SphereElement parse_sphere_element(const std::string& text) {
  return SphereElement::reduce(parse_polynomial(text, {"x", "y", "z"}));
}

LocalizedElement parse_localized(const std::string& text) {
  Parser p(text, {"x", "y", "z"});
  SphereElement num = SphereElement::reduce(p.parse_element());
  if (!p.at_slash()) {
    p.expect_end();
    return LocalizedElement(std::move(num), 0, 0);
  }
  p.take_slash();
  SphereElement denom = SphereElement::reduce(p.parse_element());
  p.expect_end();
  std::uint32_t a = 0, b = 0;
  while (auto q = try_divide(denom, SphereDivisor::OnePlusZ)) {
    denom = std::move(*q);
    ++a;
  }
  while (auto q = try_divide(denom, SphereDivisor::OneMinusZ)) {
    denom = std::move(*q);
    ++b;
  }
  if (denom != SphereElement::one()) {
    throw ParseError("denominator must be a product of (1+z) and (1-z) powers", 0);
  }
  return LocalizedElement(std::move(num), a, b);
}

RationalPoly parse_rational_poly(const std::string& text) {
  const FreePolynomial p = parse_polynomial(text, {"z"});
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : p.terms()) {
    if (!c.is_real()) throw ParseError("expected rational coefficients", 0);
    if (coeffs.size() <= e[0]) coeffs.resize(e[0] + 1, Rational(0));
    coeffs[e[0]] = c.re;
  }
  return RationalPoly(std::move(coeffs));
}

}  // namespace sphereforms
