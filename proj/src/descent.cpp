#include "sphereforms/descent.hpp"

#include "sphereforms/errors.hpp"
#include "sphereforms/grammar.hpp"

namespace sphereforms {

namespace {

SphereElement from_rational_poly(const RationalPoly& p) {
  SphereElement out = SphereElement::zero();
  for (long k = 0; k <= p.degree(); ++k) {
    const Rational c = p.coeff(static_cast<std::size_t>(k));
    if (sgn(c) == 0) continue;
    out = out + SphereElement::monomial({0, 0, static_cast<std::uint32_t>(k)},
                                        GaussianRational(c));
  }
  return out;
}

SphereElement x_minus_iy_pow(unsigned n) {
  return pow(divisor_element(SphereDivisor::XMinusIY), n);
}
SphereElement x_plus_iy_pow(unsigned n) {
  return pow(divisor_element(SphereDivisor::XPlusIY), n);
}
SphereElement one_plus_z_pow(unsigned n) {
  return pow(divisor_element(SphereDivisor::OnePlusZ), n);
}
SphereElement one_minus_z_pow(unsigned n) {
  return pow(divisor_element(SphereDivisor::OneMinusZ), n);
}

}  // namespace

std::pair<RationalPoly, RationalPoly> structure_pair(int n) {
  if (n < 0) throw DomainError("structure_pair: n must be >= 0");
  if (n == 0) {
    const RationalPoly half = RationalPoly::constant(rational(1, 2));
    return {half, half};
  }
  return bezout_pair(n);
}

RingMatrix<SphereElement> build_A_formula(int n, const RationalPoly& P, const RationalPoly& Q) {
  if (n < 0) throw DomainError("build_A: n must be >= 0");
  const auto un = static_cast<unsigned>(n);
  const SphereElement p = from_rational_poly(P);
  const SphereElement q = from_rational_poly(Q);
  const SphereElement sum_pq = p + q;
  const SphereElement plus_n = one_plus_z_pow(un);
  const SphereElement minus_n = one_minus_z_pow(un);
  return RingMatrix<SphereElement>(
      2, Chart::Global,
      {x_minus_iy_pow(un) * sum_pq, minus_n - plus_n,
       minus_n * q * q - plus_n * p * p, -(x_plus_iy_pow(un) * sum_pq)});
}

RingMatrix<SphereElement> build_A(int n, const RationalPoly& P, const RationalPoly& Q) {
  if (n < 0) throw DomainError("build_A: n must be >= 0");
  if (!verify_bezout(n, P, Q)) {
    throw BezoutMismatch("build_A: (P, Q) fails the Bezout identity for n=" + std::to_string(n));
  }
  return build_A_formula(n, P, Q);
}

RealStructureSpec make_real_structure(int n) {
  if (n < 0) throw DomainError("make_real_structure: n must be >= 0");
  auto [P, Q] = structure_pair(n);
  RingMatrix<SphereElement> A = build_A(n, P, Q);
  return RealStructureSpec{n, std::move(P), std::move(Q), std::move(A)};
}

bool verify_involution(const RingMatrix<SphereElement>& A) {
  return A * conj(A) == RingMatrix<SphereElement>::identity(A.size());
}

RingMatrix<LocalizedElement> build_M(int n, Chart chart) {
  auto [P, Q] = structure_pair(n);
  return build_M(n, chart, P, Q);
}

RingMatrix<LocalizedElement> build_M(int n, Chart chart, const RationalPoly& P,
                                     const RationalPoly& Q) {
  if (n < 0) throw DomainError("build_M: n must be >= 0");
  const auto un = static_cast<unsigned>(n);
  const SphereElement p = from_rational_poly(P);
  const SphereElement q = from_rational_poly(Q);
  if (chart == Chart::Uplus) {
    // [ ((x-iy)/(1+z))^n  (1+z)^n      ]
    // [ -P                (x+iy)^n Q   ]
    return RingMatrix<LocalizedElement>(
        2, Chart::Uplus,
        {LocalizedElement(x_minus_iy_pow(un), un, 0), LocalizedElement(one_plus_z_pow(un)),
         LocalizedElement(-p), LocalizedElement(x_plus_iy_pow(un) * q)});
  }
  if (chart == Chart::Uminus) {
    // [ (1-z)^n           ((x-iy)/(1-z))^n ]
    // [ -(x+iy)^n P       Q                ]
    return RingMatrix<LocalizedElement>(
        2, Chart::Uminus,
        {LocalizedElement(one_minus_z_pow(un)), LocalizedElement(x_minus_iy_pow(un), 0, un),
         LocalizedElement(-(x_plus_iy_pow(un) * p)), LocalizedElement(q)});
  }
  throw DomainError("build_M: chart must be Uplus or Uminus");
}

RingMatrix<LocalizedElement> build_J(int n, Chart chart) {
  if (n < 0) throw DomainError("build_J: n must be >= 0");
  const auto un = static_cast<unsigned>(n);
  if (chart == Chart::Uplus) {
    return RingMatrix<LocalizedElement>(
        2, Chart::Uplus,
        {LocalizedElement::zero(), LocalizedElement(one_plus_z_pow(un)),
         LocalizedElement(SphereElement::one(), un, 0), LocalizedElement::zero()});
  }
  if (chart == Chart::Uminus) {
    return RingMatrix<LocalizedElement>(
        2, Chart::Uminus,
        {LocalizedElement::zero(), LocalizedElement(SphereElement::one(), 0, un),
         LocalizedElement(one_minus_z_pow(un)), LocalizedElement::zero()});
  }
  throw DomainError("build_J: chart must be Uplus or Uminus");
}

RingMatrix<LocalizedElement> build_D(int n) {
  if (n < 0) throw DomainError("build_D: n must be >= 0");
  const auto un = static_cast<unsigned>(n);
  return RingMatrix<LocalizedElement>::diagonal(
      Chart::Overlap,
      {LocalizedElement(x_plus_iy_pow(un)), LocalizedElement(x_minus_iy_pow(un), un, un)});
}

bool verify_transition(int n) {
  auto [P, Q] = structure_pair(n);
  return verify_transition(n, P, Q);
}

bool verify_transition(int n, const RationalPoly& P, const RationalPoly& Q) {
  const auto lhs = build_M(n, Chart::Uplus, P, Q).with_chart(Chart::Overlap) * build_D(n);
  const auto rhs = build_M(n, Chart::Uminus, P, Q).with_chart(Chart::Overlap);
  return lhs == rhs;
}

bool verify_gluing(int n, Chart chart) {
  auto [P, Q] = structure_pair(n);
  return verify_gluing(n, chart, P, Q);
}

bool verify_gluing(int n, Chart chart, const RationalPoly& P, const RationalPoly& Q) {
  const auto A = to_localized(build_A_formula(n, P, Q), chart);
  const auto M = build_M(n, chart, P, Q);
  const auto J = build_J(n, chart);
  return A * conj(M) == M * J;
}

RingMatrix<SphereElement> matrix_A1() {
  const SphereElement x = SphereElement::variable_x();
  const SphereElement y = SphereElement::variable_y();
  const SphereElement z = SphereElement::variable_z();
  const GaussianRational i = GaussianRational::unit_i();
  return RingMatrix<SphereElement>(2, Chart::Global,
                                   {x - i * y, GaussianRational(-2) * z,
                                    GaussianRational(rational(-1, 2)) * z, -x - i * y});
}

RingMatrix<SphereElement> matrix_A2() {
  const SphereElement x = SphereElement::variable_x();
  const SphereElement y = SphereElement::variable_y();
  const SphereElement z = SphereElement::variable_z();
  const GaussianRational i = GaussianRational::unit_i();
  const SphereElement x_miy = x - i * y;
  const SphereElement x_piy = x + i * y;
  const SphereElement two = SphereElement::constant(GaussianRational(2));
  return RingMatrix<SphereElement>(
      2, Chart::Global,
      {x_miy * x_miy, GaussianRational(-4) * z,
       GaussianRational(rational(1, 4)) * (z * (z * z - two)), -(x_piy * x_piy)});
}

RingMatrix<SphereElement> matrix_A2_hat() {
  const auto a2 = matrix_A2();
  const SphereElement zero = SphereElement::zero();
  return RingMatrix<SphereElement>(3, Chart::Global,
                                   {a2(0, 0), a2(0, 1), zero,  //
                                    a2(1, 0), a2(1, 1), zero,  //
                                    zero, zero, SphereElement::one()});
}

RingMatrix<SphereElement> matrix_C() {
  const SphereElement x = SphereElement::variable_x();
  const SphereElement y = SphereElement::variable_y();
  const SphereElement z = SphereElement::variable_z();
  const GaussianRational i = GaussianRational::unit_i();
  const GaussianRational half = GaussianRational(rational(1, 2));
  const GaussianRational quarter = GaussianRational(rational(1, 4));
  const SphereElement x_piy = x + i * y;
  return RingMatrix<SphereElement>(
      3, Chart::Global,
      {half * (y * x_piy) + (i * quarter) * (z * z), i * z, x,
       -(half * (x * x_piy)) - quarter * (z * z), z, y,
       quarter * (z * (y - i * x)), -(y + i * x), z});
}

RingMatrix<SphereElement> matrix_C_bar() { return conj(matrix_C()); }

bool verify_stable_identity(const RingMatrix<SphereElement>& C,
                            const RingMatrix<SphereElement>& A2_hat,
                            const RingMatrix<SphereElement>& C_bar) {
  return C * A2_hat == C_bar;
}

bool verify_stable_example() {
  return verify_stable_identity(matrix_C(), matrix_A2_hat(), matrix_C_bar());
}

bool verify_segre_quadric() {
  const std::vector<std::string> vars{"x0", "x1", "y0", "y1"};
  const auto v = [&vars](const char* name) { return FreePolynomial::variable(vars, name); };
  const FreePolynomial x0 = v("x0"), x1 = v("x1"), y0 = v("y0"), y1 = v("y1");
  const GaussianRational i = GaussianRational::unit_i();

  const FreePolynomial X = x0 * y1 + x1 * y0;
  const FreePolynomial Y = i * (x1 * y0 - x0 * y1);
  const FreePolynomial Z = x0 * y0 - x1 * y1;
  const FreePolynomial T = x0 * y0 + x1 * y1;
  return (X * X + Y * Y + Z * Z - T * T).is_zero();
}

std::vector<SphereElement> ideal_generators(int n) {
  if (n < 0) throw DomainError("ideal_generators: n must be >= 0");
  std::vector<SphereElement> gens;
  gens.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = n; k >= 0; --k) {
    gens.push_back(x_plus_iy_pow(static_cast<unsigned>(k)) *
                   one_minus_z_pow(static_cast<unsigned>(n - k)));
  }
  return gens;
}

}  // namespace sphereforms
