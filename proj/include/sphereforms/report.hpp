#pragma once

#include <map>
#include <string>
#include <vector>

#include "sphereforms/descent.hpp"
#include "sphereforms/topology.hpp"

namespace sphereforms {

/// Everything the toolkit can say about the structure with index n: the
/// Bezout pair, the global matrix, the exact identity checks, and the
/// topological invariants of the corresponding real form.
struct BundleReport {
  int n = 0;
  std::string P;  // serialized RationalPoly
  std::string Q;
  RingMatrix<SphereElement> A = RingMatrix<SphereElement>::identity(2);

  // Exact checks, all expected true for untampered inputs.
  bool involution = false;
  bool det_A_is_minus_one = false;
  bool det_M_plus = false;
  bool det_M_minus = false;
  bool transition = false;
  bool gluing_plus = false;
  bool gluing_minus = false;

  int winding = 0;            // clutching number recovered numerically
  int stable_class = 0;       // class after adding a trivial line (0 or 1)
  int h1_infinity_order = 0;  // |Z/nZ|, 0 encoding Z

  bool all_checks() const {
    return involution && det_A_is_minus_one && det_M_plus && det_M_minus && transition &&
           gluing_plus && gluing_minus;
  }

  std::vector<std::pair<std::string, bool>> named_checks() const {
    return {{"involution", involution},
            {"det_A_is_minus_one", det_A_is_minus_one},
            {"det_M_plus", det_M_plus},
            {"det_M_minus", det_M_minus},
            {"transition", transition},
            {"gluing_plus", gluing_plus},
            {"gluing_minus", gluing_minus}};
  }
};

BundleReport make_report(int n);

/// Report computed from an explicit (possibly non-Bezout) pair; the verify
/// command's fault-injection hook goes through here.
BundleReport make_report_with_pair(int n, const RationalPoly& P, const RationalPoly& Q);

std::string report_text(const BundleReport& r);
/// Canonical JSON: fixed key order, 2-space indentation, no trailing newline.
std::string report_json(const BundleReport& r);
std::string report_latex(const BundleReport& r);

}  // namespace sphereforms
