#include <CLI11.hpp>
#include <cstdio>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "sphereforms/descent.hpp"
#include "sphereforms/errors.hpp"
#include "sphereforms/grammar.hpp"
#include "sphereforms/report.hpp"
#include "sphereforms/topology.hpp"

namespace {

using namespace sphereforms;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

int cmd_report(int n, const std::string& format) {
  const BundleReport r = make_report(n);
  if (format == "json") {
    std::cout << report_json(r) << "\n";
  } else if (format == "latex") {
    std::cout << report_latex(r);
  } else {
    std::cout << report_text(r);
  }
  return r.all_checks() ? kExitOk : kExitCheckFailed;
}

struct VerifyRow {
  int n;
  std::vector<std::pair<std::string, bool>> checks;
};

VerifyRow verify_one(int n, bool inject_bad_bezout) {
  auto [P, Q] = structure_pair(n);
  if (inject_bad_bezout) Q = Q + RationalPoly::constant(Rational(1));
  const BundleReport r = make_report_with_pair(n, P, Q);
  return {n, r.named_checks()};
}

int cmd_verify(int n_min, int n_max, bool parallel, bool inject_bad_bezout) {
  std::vector<VerifyRow> rows(static_cast<std::size_t>(n_max - n_min + 1));
  if (parallel) {
    std::vector<std::future<VerifyRow>> futures;
    futures.reserve(rows.size());
    for (int n = n_min; n <= n_max; ++n) {
      futures.push_back(
          std::async(std::launch::async, verify_one, n, inject_bad_bezout));
    }
    for (std::size_t k = 0; k < futures.size(); ++k) rows[k] = futures[k].get();
  } else {
    for (int n = n_min; n <= n_max; ++n) {
      rows[static_cast<std::size_t>(n - n_min)] = verify_one(n, inject_bad_bezout);
    }
  }

  const char* headers[] = {"involution", "det_A",      "det_M+",  "det_M-",
                           "transition", "gluing+",    "gluing-"};
  std::printf("%4s", "n");
  for (const char* h : headers) std::printf("  %-10s", h);
  std::printf("\n");

  bool all_ok = true;
  std::vector<std::string> failures;
  for (const auto& row : rows) {
    std::printf("%4d", row.n);
    for (const auto& [name, ok] : row.checks) {
      std::printf("  %-10s", ok ? "ok" : "FAIL");
      if (!ok) {
        all_ok = false;
        failures.push_back("n=" + std::to_string(row.n) + ": " + name);
      }
    }
    std::printf("\n");
  }

  const bool stable_ok = verify_stable_example();
  const bool segre_ok = verify_segre_quadric();
  std::printf("%-16s  %s\n", "stable_example", stable_ok ? "ok" : "FAIL");
  std::printf("%-16s  %s\n", "segre_quadric", segre_ok ? "ok" : "FAIL");
  if (!stable_ok) failures.push_back("stable_example");
  if (!segre_ok) failures.push_back("segre_quadric");
  all_ok = all_ok && stable_ok && segre_ok;

  for (const auto& f : failures) std::printf("FAIL %s\n", f.c_str());
  return all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_classify(const std::string& loop_path, int rank) {
  LoopSample loop;
  try {
    loop = load_loop_csv_file(loop_path);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotOrientationPreserving& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  int w = 0;
  try {
    w = winding_number(loop);
  } catch (const Undersampled& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  const BundleClass cls = classify(rank, w);
  std::cout << "samples: " << loop.size() << "\n";
  std::cout << "winding: " << w << "\n";
  std::cout << "rank: " << rank << "\n";
  std::cout << "class: " << cls.class_value << "\n";
  if (rank == 2) {
    std::cout << "model: V_" << std::abs(w);
    if (w < 0) std::cout << " (orientation reversed relative to the sampling convention)";
    std::cout << "\n";
  } else if (rank >= 3) {
    std::cout << "model: " << (cls.class_value == 0 ? "trivial (1-stably trivial class)"
                                                    : "nontrivial class")
              << "\n";
  }
  return kExitOk;
}

int cmd_bezout(int n) {
  auto [P, Q] = bezout_pair(n);
  std::cout << "P_" << n << " = " << serialize(P) << "\n";
  std::cout << "Q_" << n << " = " << serialize(Q) << "\n";
  return kExitOk;
}

bool parse_range(const std::string& text, int& lo, int& hi) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return false;
  try {
    std::size_t used = 0;
    lo = std::stoi(text.substr(0, dots), &used);
    if (used != dots) return false;
    const std::string rest = text.substr(dots + 2);
    hi = std::stoi(rest, &used);
    if (used != rest.size()) return false;
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the real-structure family on the trivial rank-2 "
               "bundle over the complexified 2-sphere"};
  app.require_subcommand(1);

  auto* report = app.add_subcommand("report", "Full per-n report (text, json or latex)");
  int report_n = 0;
  std::string format = "text";
  report->add_option("--n", report_n, "Structure index (n >= 0)")->required();
  report->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  auto* verify = app.add_subcommand("verify", "Run all identity checks over a range of n");
  std::string range;
  bool parallel = false;
  bool inject_bad_bezout = false;
  verify->add_option("--range", range, "Range of n, e.g. 0..12")->required();
  verify->add_flag("--parallel", parallel, "Fan out per-n work to threads");
  verify->add_flag("--inject-bad-bezout", inject_bad_bezout)->group("");  // test hook

  auto* classify_cmd = app.add_subcommand("classify", "Classify a sampled loop in GL2+(R)");
  std::string loop_path;
  int rank = 2;
  classify_cmd->add_option("--loop", loop_path, "CSV file, rows g11,g12,g21,g22")->required();
  classify_cmd->add_option("--rank", rank, "Bundle rank (>= 1)")->required();

  auto* bezout = app.add_subcommand("bezout", "Print the minimal Bezout pair (P_n, Q_n)");
  int bezout_n = 1;
  bezout->add_option("--n", bezout_n, "n >= 1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (report->parsed()) {
      if (report_n < 0) {
        std::cerr << "error: --n must be >= 0\n";
        return kExitUsage;
      }
      return cmd_report(report_n, format);
    }
    if (verify->parsed()) {
      int lo = 0, hi = 0;
      if (!parse_range(range, lo, hi) || lo < 0 || lo > hi) {
        std::cerr << "error: --range must be a..b with 0 <= a <= b\n";
        return kExitUsage;
      }
      return cmd_verify(lo, hi, parallel, inject_bad_bezout);
    }
    if (classify_cmd->parsed()) {
      if (rank < 1) {
        std::cerr << "error: --rank must be >= 1\n";
        return kExitUsage;
      }
      return cmd_classify(loop_path, rank);
    }
    if (bezout->parsed()) {
      if (bezout_n < 1) {
        std::cerr << "error: --n must be >= 1\n";
        return kExitUsage;
      }
      return cmd_bezout(bezout_n);
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
