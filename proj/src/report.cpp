#include "sphereforms/report.hpp"

#include <json.hpp>
#include <sstream>

#include "sphereforms/errors.hpp"
#include "sphereforms/grammar.hpp"

namespace sphereforms {

namespace {

using Json = nlohmann::ordered_json;

// LaTeX rendering of a rational: sign outside \frac.
std::string latex_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_str();
  const std::string sign = sgn(q) < 0 ? "-" : "";
  Rational a = abs(q);
  return sign + "\\tfrac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

std::string latex_coeff(const GaussianRational& c) {
  if (c.is_real()) return latex_rational(c.re);
  if (c.is_imaginary()) {
    if (c.im == 1) return "i";
    if (c.im == -1) return "-i";
    return latex_rational(c.im) + "i";
  }
  return "(" + latex_rational(c.re) + (sgn(c.im) > 0 ? "+" : "-") +
         (abs(c.im) == 1 ? "i" : latex_rational(abs(c.im)) + "i") + ")";
}

std::string latex_monomial(const Monomial& m) {
  std::string out;
  const auto var = [&out](const char* name, std::uint32_t e) {
    if (e == 0) return;
    out += name;
    if (e > 1) out += "^{" + std::to_string(e) + "}";
  };
  var("x", m.ex);
  var("y", m.ey);
  var("z", m.ez);
  return out;
}

std::string latex_element(const SphereElement& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    GaussianRational c = t.coeff;
    if (!first) {
      bool negative = false;
      if (c.is_real() && sgn(c.re) < 0) {
        negative = true;
        c.re = -c.re;
      } else if (c.is_imaginary() && sgn(c.im) < 0) {
        negative = true;
        c.im = -c.im;
      }
      out += negative ? "-" : "+";
    }
    const std::string mono = latex_monomial(t.mono);
    if (mono.empty()) {
      out += latex_coeff(c);
    } else if (c.is_real() && c.re == 1) {
      out += mono;
    } else if (c.is_real() && c.re == -1) {
      out += "-" + mono;
    } else {
      out += latex_coeff(c) + mono;
    }
    first = false;
  }
  return out;
}

Json matrix_json(const RingMatrix<SphereElement>& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.size(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.size(); ++c) row.push_back(serialize(m(r, c)));
    rows.push_back(std::move(row));
  }
  Json out;
  out["chart"] = chart_name(m.chart());
  out["entries"] = std::move(rows);
  return out;
}

}  // namespace

BundleReport make_report_with_pair(int n, const RationalPoly& P, const RationalPoly& Q) {
  if (n < 0) throw DomainError("report: n must be >= 0");
  BundleReport r;
  r.n = n;
  r.P = serialize(P);
  r.Q = serialize(Q);
  r.A = build_A_formula(n, P, Q);

  r.involution = verify_involution(r.A);
  r.det_A_is_minus_one = det(r.A) == SphereElement::constant(GaussianRational(-1));
  r.det_M_plus = det(build_M(n, Chart::Uplus, P, Q)) == LocalizedElement::one();
  r.det_M_minus = det(build_M(n, Chart::Uminus, P, Q)) == LocalizedElement::one();
  r.transition = verify_transition(n, P, Q);
  r.gluing_plus = verify_gluing(n, Chart::Uplus, P, Q);
  r.gluing_minus = verify_gluing(n, Chart::Uminus, P, Q);

  r.winding = winding_number(rotation_loop(n));
  r.stable_class = classify(3, r.winding).class_value;
  r.h1_infinity_order = h1_infinity(n);
  return r;
}

BundleReport make_report(int n) {
  auto [P, Q] = structure_pair(n);
  return make_report_with_pair(n, P, Q);
}

std::string report_text(const BundleReport& r) {
  std::ostringstream out;
  out << "n: " << r.n << "\n";
  out << "P: " << r.P << "\n";
  out << "Q: " << r.Q << "\n";
  out << "A: [" << matrix_text(r.A) << "]\n";
  out << "checks:\n";
  for (const auto& [name, ok] : r.named_checks()) {
    out << "  " << name << ": " << (ok ? "pass" : "FAIL") << "\n";
  }
  out << "invariants:\n";
  out << "  winding: " << r.winding << "\n";
  out << "  stable_class: " << r.stable_class << "\n";
  // order of H_1 at infinity; 0 encodes the infinite cyclic group
  out << "  h1_infinity_order: " << r.h1_infinity_order << "\n";
  return out.str();
}

std::string report_json(const BundleReport& r) {
  Json j;
  j["n"] = r.n;
  j["bezout"] = Json{{"P", r.P}, {"Q", r.Q}};
  j["A"] = matrix_json(r.A);
  Json checks;
  for (const auto& [name, ok] : r.named_checks()) checks[name] = ok;
  j["checks"] = std::move(checks);
  j["invariants"] = Json{{"winding", r.winding},
                         {"stable_class", r.stable_class},
                         {"h1_infinity_order", r.h1_infinity_order}};
  return j.dump(2);
}

std::string report_latex(const BundleReport& r) {
  std::ostringstream out;
  out << "% structure index n = " << r.n << "\n";
  out << "P_{" << r.n << "} = " << latex_element(parse_sphere_element(r.P)) << ", \\quad Q_{"
      << r.n << "} = " << latex_element(parse_sphere_element(r.Q)) << "\n";
  out << "A_{" << r.n << "} = \\begin{pmatrix}\n";
  for (int row = 0; row < r.A.size(); ++row) {
    out << "  ";
    for (int col = 0; col < r.A.size(); ++col) {
      if (col) out << " & ";
      out << latex_element(r.A(row, col));
    }
    out << (row + 1 < r.A.size() ? " \\\\" : "") << "\n";
  }
  out << "\\end{pmatrix}\n";
  return out.str();
}

}  // namespace sphereforms
