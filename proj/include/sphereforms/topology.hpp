#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

namespace sphereforms {

/// Sampled loop in GL2+(R): g(theta_k), theta_k = 2*pi*k/N, k = 0..N-1.
/// The loop closes by convention (sample 0 is reused as sample N).
struct LoopSample {
  std::vector<Eigen::Matrix2d> samples;

  std::size_t size() const { return samples.size(); }
};

/// Rotation angle in [0, 2*pi) of the orthogonal polar factor of g,
/// computed in closed form: g + det(g) g^-T = trace(S) R, so the angle is
/// atan2(g21 - g12, g11 + g22). Throws NotOrientationPreserving if
/// det(g) <= 0 and SingularSample if det(g) < 1e-12.
double polar_retract(const Eigen::Matrix2d& g);

/// Integer winding of the retracted SO(2) loop via cumulative angle
/// unwrapping. Throws Undersampled if consecutive retracted angles jump by
/// pi/2 or more, or if the total fails to land within 0.1 of an integer
/// multiple of 2*pi.
int winding_number(const LoopSample& loop);

/// Isomorphism class of the oriented rank-r bundle with clutching winding w.
struct BundleClass {
  int rank;
  int class_value;  // full integer for rank 2; 0/1 for rank >= 3; 0 for rank 1
};

BundleClass classify(int rank, int w);

/// Order of the first homology group at infinity of the rank-2 model with
/// clutching number n: |Z/nZ| = n, with 0 encoding the infinite cyclic group.
int h1_infinity(int n);

/// Total spaces are isomorphic as real varieties iff the bundles agree.
bool iso_total_spaces(int n, int m);
/// After adding a trivial line, only the parity of the class survives.
bool stable_iso(int n, int m);

/// theta -> R(n*theta) with N uniform samples; R is the counterclockwise
/// rotation [[cos, -sin], [sin, cos]].
LoopSample rotation_loop(int n, int sample_count = 1024);

/// CSV rows "g11,g12,g21,g22", one sample per line. Validates determinant
/// positivity per sample; throws ParseError on malformed rows.
LoopSample load_loop_csv(std::istream& in);
LoopSample load_loop_csv_file(const std::string& path);

}  // namespace sphereforms
