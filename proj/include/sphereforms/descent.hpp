#pragma once

#include <vector>

#include "sphereforms/rational_poly.hpp"
#include "sphereforms/ring_matrix.hpp"

namespace sphereforms {

/// One member of the family of real structures on the trivial rank-2 bundle
/// over the complexified sphere: the Bezout pair and the global matrix built
/// from it. n = 0 uses the convention (P, Q) = (1/2, 1/2).
struct RealStructureSpec {
  int n;
  RationalPoly P;
  RationalPoly Q;
  RingMatrix<SphereElement> A;
};

RealStructureSpec make_real_structure(int n);

/// The raw matrix formula
///   [ (x-iy)^n (P+Q)              (1-z)^n - (1+z)^n    ]
///   [ -(1+z)^n P^2 + (1-z)^n Q^2  -(x+iy)^n (P+Q)      ]
/// without the Bezout check; exposed so that tests (and the verify test hook)
/// can build matrices from deliberately broken pairs.
RingMatrix<SphereElement> build_A_formula(int n, const RationalPoly& P, const RationalPoly& Q);

/// Same, but throws BezoutMismatch unless (1+z)^n P + (1-z)^n Q = 1.
RingMatrix<SphereElement> build_A(int n, const RationalPoly& P, const RationalPoly& Q);

/// A * conj(A) == identity, exactly in the quotient ring.
bool verify_involution(const RingMatrix<SphereElement>& A);

/// Local frame on the chart: det = 1, transition M+ * D = M-.
RingMatrix<LocalizedElement> build_M(int n, Chart chart);
RingMatrix<LocalizedElement> build_M(int n, Chart chart, const RationalPoly& P,
                                     const RationalPoly& Q);
/// Anti-diagonal local structure matrix on the chart.
RingMatrix<LocalizedElement> build_J(int n, Chart chart);
/// diag((x+iy)^n, (x+iy)^-n) on the overlap, with
/// (x+iy)^-n written as (x-iy)^n / ((1+z)^n (1-z)^n).
RingMatrix<LocalizedElement> build_D(int n);

/// M+ * D == M- over the overlap ring (inversion-free form of D = M+^-1 M-).
bool verify_transition(int n);
bool verify_transition(int n, const RationalPoly& P, const RationalPoly& Q);

/// A * conj(M) == M * J in the chart's localized ring (inversion-free form of
/// A = M J conj(M)^-1).
bool verify_gluing(int n, Chart chart);
bool verify_gluing(int n, Chart chart, const RationalPoly& P, const RationalPoly& Q);

/// The Bezout pair a structure uses: bezout_pair(n) for n >= 1 and the
/// (1/2, 1/2) convention at n = 0.
std::pair<RationalPoly, RationalPoly> structure_pair(int n);

/// C * diag(A2, 1) == conj(C) for the built-in 3x3 equivalence witness.
bool verify_stable_example();
/// Same identity with caller-supplied matrices; for perturbation tests.
bool verify_stable_identity(const RingMatrix<SphereElement>& C,
                            const RingMatrix<SphereElement>& A2_hat,
                            const RingMatrix<SphereElement>& C_bar);

/// (AB+CD)^2 + (i(CD-AB))^2 + (AC-BD)^2 - (AC+BD)^2 == 0 for the quadric
/// embedding components in the free ring Q[i][x0, x1, y0, y1].
bool verify_segre_quadric();

/// Generators (x+iy)^k (1-z)^(n-k), k = n..0, of the ideal (x+iy, 1-z)^n.
std::vector<SphereElement> ideal_generators(int n);

// Matrices transcribed as source-of-truth constants, covered by golden tests.
RingMatrix<SphereElement> matrix_A1();
RingMatrix<SphereElement> matrix_A2();
RingMatrix<SphereElement> matrix_A2_hat();
RingMatrix<SphereElement> matrix_C();
RingMatrix<SphereElement> matrix_C_bar();

}  // namespace sphereforms
