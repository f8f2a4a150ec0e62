#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hyperbolic {

struct Invocation {
  /// validate | solve | develop | holonomy | volume | wirtinger | report
  std::string subcommand;
  /// Triangulation file, or the link file for `wirtinger`.
  std::string input;
  std::optional<std::string> curves;
  std::optional<std::string> words;
  std::optional<std::string> link;
  std::optional<std::string> compare_table;
  /// Generator eliminations "g=<word>", applied in order.
  std::vector<std::string> eliminate;
  int anchor = 0;
  double tol = 1e-12;
  int max_iters = 100;
  std::optional<std::complex<double>> seed;
  int precision = 9;
};

enum ExitCode : int { kExitOk = 0, kExitInvalid = 1, kExitSolver = 2 };

/// Runs one subcommand, writing the report to `out` and diagnostics to `err`.
int run(const Invocation& inv, std::ostream& out, std::ostream& err);

}  // namespace hyperbolic
