#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tfhankel/series.hpp"

namespace tfh::cli {

enum class OutputFormat { Csv, Json };

/// Everything a subcommand needs, after parsing and validation.
struct RunConfig {
  std::string command;
  EquationKind equation = EquationKind::Atom;
  std::vector<int> d{4};
  int D_max = 15;
  int precision = 50;
  int pade_M = 5;
  int pade_N = 8;
  /// Grid points as typed, so they can be echoed verbatim.
  std::vector<std::string> xs{"1", "5", "10", "20", "50", "100"};
  OutputFormat output_format = OutputFormat::Csv;
  int digits = 20;
  std::optional<std::filesystem::path> cache_path;
  /// oracle: bisection tolerance on u'(0).
  std::string tol = "1e-10";
  /// table: evaluate at this u'(0) instead of computing it.
  std::optional<std::string> slope;
  /// oracle: slope bracket; defaults depend on the equation.
  std::optional<std::vector<std::string>> bracket;
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

/// Runs one invocation. argv[0] is the program name. Results go to `out`,
/// diagnostics and timings to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace tfh::cli
