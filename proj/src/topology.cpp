#include "sphereforms/topology.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "sphereforms/errors.hpp"

namespace sphereforms {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kDetTolerance = 1e-12;
constexpr double kMaxAngleStep = 1.5707963267948966;  // pi/2
constexpr double kMaxResidual = 0.1;
}  // namespace

double polar_retract(const Eigen::Matrix2d& g) {
  const double d = g.determinant();
  if (d <= 0.0) throw NotOrientationPreserving("polar_retract: determinant is not positive");
  if (d < kDetTolerance) throw SingularSample("polar_retract: determinant below tolerance");
  const double angle = std::atan2(g(1, 0) - g(0, 1), g(0, 0) + g(1, 1));
  return angle < 0.0 ? angle + kTwoPi : angle;
}

int winding_number(const LoopSample& loop) {
  if (loop.samples.empty()) throw Undersampled("winding_number: empty loop");
  std::vector<double> angles;
  angles.reserve(loop.size() + 1);
  for (const auto& g : loop.samples) angles.push_back(polar_retract(g));
  angles.push_back(angles.front());  // closure

  double total = 0.0;
  for (std::size_t k = 0; k + 1 < angles.size(); ++k) {
    double delta = angles[k + 1] - angles[k];
    if (delta > kTwoPi / 2) delta -= kTwoPi;
    if (delta <= -kTwoPi / 2) delta += kTwoPi;
    if (std::abs(delta) >= kMaxAngleStep) {
      throw Undersampled("winding_number: angle jump >= pi/2 between samples " +
                         std::to_string(k) + " and " + std::to_string(k + 1));
    }
    total += delta;
  }
  const double turns = total / kTwoPi;
  const double nearest = std::round(turns);
  if (std::abs(turns - nearest) >= kMaxResidual) {
    throw Undersampled("winding_number: unwrapped total is not close to an integer");
  }
  return static_cast<int>(nearest);
}

BundleClass classify(int rank, int w) {
  if (rank < 1) throw DomainError("classify: rank must be >= 1");
  if (rank == 1) return {rank, 0};
  if (rank == 2) return {rank, w};
  return {rank, ((w % 2) + 2) % 2};
}

int h1_infinity(int n) {
  if (n < 0) throw DomainError("h1_infinity: n must be >= 0");
  return n;
}

bool iso_total_spaces(int n, int m) {
  if (n < 0 || m < 0) throw DomainError("iso_total_spaces: arguments must be >= 0");
  return n == m;
}

bool stable_iso(int n, int m) {
  if (n < 0 || m < 0) throw DomainError("stable_iso: arguments must be >= 0");
  return (n - m) % 2 == 0;
}

LoopSample rotation_loop(int n, int sample_count) {
  LoopSample loop;
  loop.samples.reserve(static_cast<std::size_t>(sample_count));
  for (int k = 0; k < sample_count; ++k) {
    const double theta = kTwoPi * k / sample_count * n;
    Eigen::Matrix2d g;
    g << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    loop.samples.push_back(g);
  }
  return loop;
}

LoopSample load_loop_csv(std::istream& in) {
  LoopSample loop;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    double v[4];
    char sep = ',';
    for (int k = 0; k < 4; ++k) {
      if (k > 0) {
        row >> sep;
        if (sep != ',') throw ParseError("loop CSV: expected ','", lineno);
      }
      if (!(row >> v[k])) {
        throw ParseError("loop CSV: expected four numbers per row", lineno);
      }
    }
    std::string rest;
    if (row >> rest) throw ParseError("loop CSV: trailing data", lineno);
    Eigen::Matrix2d g;
    g << v[0], v[1], v[2], v[3];
    if (g.determinant() <= 0.0) {
      throw NotOrientationPreserving("loop CSV: sample " + std::to_string(lineno) +
                                     " has non-positive determinant");
    }
    loop.samples.push_back(g);
  }
  if (loop.samples.empty()) throw ParseError("loop CSV: no samples", 0);
  return loop;
}

LoopSample load_loop_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open loop file: " + path, 0);
  return load_loop_csv(in);
}

}  // namespace sphereforms
