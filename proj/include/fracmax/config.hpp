#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fracmax/core.hpp"

namespace fracmax {

enum class Family { Linear, Quadratic, LogRatio, Ball };

const char* family_name(Family f);

/// Optional per-config overrides of the solver defaults.
struct SolverOverrides {
  std::optional<double> tolerance_j;
  std::optional<double> tolerance_beta;
  std::optional<int> max_iterations;
  std::optional<Strategy> strategy;

  bool operator==(const SolverOverrides&) const = default;
};

/// A problem instance as read from a config file: one family block with the
/// coefficient names of that family, plus optional solver overrides.
struct ProblemConfig {
  Family family = Family::Linear;

  // linear / quadratic
  double a = 0.0, b = 0.0, c = 0.0;
  double a0 = 0.0, b0 = 0.0, c0 = 0.0;

  // interval families
  double x1 = 0.0, x2 = 0.0;

  // logratio
  std::string f0_expr, f_expr;
  int grid_resolution = 4097;
  double refine_tolerance = 1e-12;

  // ball
  std::vector<double> w0, w;
  double h0 = 0.0, h = 0.0, r = 0.0;

  SolverOverrides solver;

  bool operator==(const ProblemConfig&) const = default;
};

/// Parses key = value text with # comments and a single family block.
/// Unknown keys, duplicates, missing fields and invariant violations are
/// reported as ConfigParseError with a 1-based line number.
ProblemConfig parse_config(const std::string& text, const std::string& origin = "<config>");

ProblemConfig load_config_file(const std::string& path);

/// Canonical text form; parse_config(dump_config(c)) reproduces c exactly.
std::string dump_config(const ProblemConfig& cfg);

/// Instantiates the problem described by the config. Family invariants are
/// enforced by the problem constructors.
std::unique_ptr<RatioProblem> make_problem(const ProblemConfig& cfg);

/// Base options with the config's overrides applied.
SolverOptions solver_options_for(const ProblemConfig& cfg, const SolverOptions& base = {});

}  // namespace fracmax
