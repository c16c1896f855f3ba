#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fracmax/config.hpp"
#include "fracmax/core.hpp"
#include "fracmax/curve.hpp"
#include "fracmax/errors.hpp"
#include "fracmax/format.hpp"
#include "fracmax/problems/ball.hpp"

namespace {

using namespace fracmax;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNoConvergence = 3;

Strategy strategy_from_name(const std::string& name) {
  if (name == "bisect" || name == "bisection") return Strategy::Bisection;
  if (name == "dinkelbach") return Strategy::Dinkelbach;
  return Strategy::Hybrid;
}

struct CommonFlags {
  std::string config_path;
  std::string strategy;
  double tol = 0.0;
};

SolverOptions options_for(const ProblemConfig& cfg, const CommonFlags& flags) {
  SolverOptions opts = solver_options_for(cfg);
  if (!flags.strategy.empty()) opts.strategy = strategy_from_name(flags.strategy);
  if (flags.tol > 0.0) opts.tolerance_j = flags.tol;
  return opts;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigParseError("cannot open output file '" + path + "'", 0);
  out << content;
  if (!out) throw ConfigParseError("failed writing output file '" + path + "'", 0);
}

std::string join_point(const Point& x) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += to_full_precision(x[i]);
  }
  return s;
}

int cmd_solve(const CommonFlags& flags, bool as_json, bool dump_only) {
  const ProblemConfig cfg = load_config_file(flags.config_path);
  if (dump_only) {
    std::cout << dump_config(cfg);
    return kExitOk;
  }
  const std::unique_ptr<RatioProblem> problem = make_problem(cfg);
  const SolverOptions opts = options_for(cfg, flags);
  const Solution sol = solve_ratio_max(*problem, ReductionMode::Difference, opts);

  std::optional<double> estimate;
  const auto* ball = dynamic_cast<const HilbertBallProblem*>(problem.get());
  if (ball) {
    try {
      estimate = ball->asymptotic_estimate();
    } catch (const EstimateUndefinedError&) {
    }
  }

  if (as_json) {
    nlohmann::json out;
    out["family"] = family_name(cfg.family);
    out["beta_max"] = sol.beta_max;
    out["x_max"] = sol.x_max;
    out["residual"] = sol.residual;
    out["iterations"] = sol.iterations;
    if (estimate) out["estimate"] = *estimate;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "family: " << family_name(cfg.family) << "\n";
    std::cout << "beta_max: " << to_full_precision(sol.beta_max) << "\n";
    std::cout << "x_max: " << join_point(sol.x_max) << "\n";
    std::cout << "residual: " << to_full_precision(sol.residual) << "\n";
    std::cout << "iterations: " << sol.iterations << "\n";
    if (ball) {
      if (estimate)
        std::cout << "estimate: " << to_full_precision(*estimate) << "\n";
      else
        std::cout << "estimate: undefined\n";
    }
  }
  return kExitOk;
}

int cmd_curve(const CommonFlags& flags, std::optional<double> from, std::optional<double> to,
              int samples, const std::string& out_path) {
  const ProblemConfig cfg = load_config_file(flags.config_path);
  const std::unique_ptr<RatioProblem> problem = make_problem(cfg);
  const SolverOptions opts = options_for(cfg, flags);

  double lo, hi;
  if (from && to) {
    lo = *from;
    hi = *to;
  } else {
    // default sweep spans from 0 to the solved optimum, whichever side it is on
    const Solution sol = solve_ratio_max(*problem, ReductionMode::Difference, opts);
    lo = from ? *from : std::min(0.0, sol.beta_max);
    hi = to ? *to : std::max(0.0, sol.beta_max);
    if (!(lo < hi)) {
      lo -= 1.0;
      hi += 1.0;
    }
  }
  const auto rows = sample_curve(*problem, ReductionMode::Difference, lo, hi, samples);
  write_output(out_path, curve_csv(rows));
  return kExitOk;
}

int cmd_asymptote(const CommonFlags& flags, std::optional<double> from,
                  std::optional<double> to, int samples, const std::string& out_path) {
  const ProblemConfig cfg = load_config_file(flags.config_path);
  if (cfg.family != Family::Ball)
    throw ConfigParseError("asymptote curves are defined for the ball family only; '" +
                               flags.config_path + "' has family " +
                               family_name(cfg.family),
                           0);
  const std::unique_ptr<RatioProblem> problem = make_problem(cfg);
  const auto* ball = dynamic_cast<const HilbertBallProblem*>(problem.get());

  double lo, hi;
  if (from && to) {
    lo = *from;
    hi = *to;
  } else {
    const Solution sol =
        solve_ratio_max(*problem, ReductionMode::Difference, options_for(cfg, flags));
    lo = std::min(0.0, sol.beta_max);
    hi = std::max(0.0, sol.beta_max);
    // pad so the y1/y2 crossing sits strictly inside the sweep
    const double pad = 0.1 * (hi - lo) + 1.0;
    if (from) lo = *from; else lo -= pad;
    if (to) hi = *to; else hi += pad;
  }
  if (!(lo < hi) && samples > 1)
    throw ConfigParseError("asymptote sweep needs --from < --to", 0);

  std::vector<double> grid(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i)
    grid[static_cast<std::size_t>(i)] =
        samples == 1 ? lo : (i == samples - 1 ? hi : lo + (hi - lo) * i / (samples - 1));
  write_output(out_path, asymptote_csv(ball->asymptote_curves(grid)));
  return kExitOk;
}

int cmd_examples(double tol) {
  const std::vector<double> w0{1, 1, 1, 1, 1, 0, 0, 0, 0, 10};
  const std::vector<double> w{1, 0, 0, 0, 0, 1, 1, 1, 1, 1};

  struct Check {
    std::string name;
    double expected;
    double actual;
  };
  std::vector<Check> checks;
  auto run_one = [&](const std::string& tag, double h0, double expect_beta,
                     double expect_est) {
    const HilbertBallProblem p(w0, w, h0, 2.7, 1.0);
    const Solution sol = solve_ratio_max(p, ReductionMode::Difference, {});
    checks.push_back({tag + " beta_max", expect_beta, sol.beta_max});
    checks.push_back({tag + " estimate", expect_est, p.asymptotic_estimate()});
  };
  run_one("example1", 15.0, 43.61, 41.95);
  run_one("example2", -15.0, -1.18, -2.04);

  bool all_pass = true;
  std::printf("%-20s %12s %22s   %s\n", "check", "expected", "actual", "status");
  for (const Check& c : checks) {
    const bool pass = std::abs(c.actual - c.expected) <= tol;
    all_pass = all_pass && pass;
    std::printf("%-20s %12.4f %22.15f   %s\n", c.name.c_str(), c.expected, c.actual,
                pass ? "pass" : "FAIL");
  }
  std::printf("%s (tolerance %g)\n", all_pass ? "all checks passed" : "CHECKS FAILED", tol);
  return all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fracmax: maximize a ratio of two functionals by reducing it to a "
               "parametric difference problem plus scalar root finding"};
  app.require_subcommand(1);

  CommonFlags solve_flags, curve_flags, asym_flags;
  bool as_json = false, dump_only = false;
  std::optional<double> curve_from, curve_to, asym_from, asym_to;
  int curve_samples = 201, asym_samples = 201;
  std::string curve_out, asym_out;
  double examples_tol = 0.01;

  auto add_common = [](CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("config", flags.config_path, "problem config file")->required();
    cmd->add_option("--strategy", flags.strategy, "root-finding strategy")
        ->check(CLI::IsMember({"bisect", "dinkelbach", "hybrid"}));
    cmd->add_option("--tol", flags.tol, "absolute tolerance on |j(beta)|");
  };

  CLI::App* solve = app.add_subcommand("solve", "solve a config and report the optimum");
  add_common(solve, solve_flags);
  solve->add_flag("--json", as_json, "emit a machine-readable solution record");
  solve->add_flag("--dump-config", dump_only, "echo the parsed config in canonical form");

  CLI::App* curve = app.add_subcommand("curve", "sweep beta and tabulate j and J(x_beta)");
  add_common(curve, curve_flags);
  curve->add_option("--from", curve_from, "sweep start");
  curve->add_option("--to", curve_to, "sweep end");
  curve->add_option("--samples", curve_samples, "number of rows")->check(CLI::PositiveNumber);
  curve->add_option("--out", curve_out, "output CSV path (stdout when omitted)");

  CLI::App* asym = app.add_subcommand("asymptote", "tabulate y1, y2 and the asymptote lines");
  add_common(asym, asym_flags);
  asym->add_option("--from", asym_from, "sweep start");
  asym->add_option("--to", asym_to, "sweep end");
  asym->add_option("--samples", asym_samples, "number of rows")->check(CLI::PositiveNumber);
  asym->add_option("--out", asym_out, "output CSV path (stdout when omitted)");

  CLI::App* examples =
      app.add_subcommand("examples", "run the bundled reference problems as a self-check");
  examples->add_option("--tol", examples_tol, "comparison tolerance")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_flags, as_json, dump_only);
    if (curve->parsed())
      return cmd_curve(curve_flags, curve_from, curve_to, curve_samples, curve_out);
    if (asym->parsed())
      return cmd_asymptote(asym_flags, asym_from, asym_to, asym_samples, asym_out);
    if (examples->parsed()) return cmd_examples(examples_tol);
  } catch (const ConfigParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ExprParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const NonConvergenceError& e) {
    std::cerr << "error: " << e.what() << " (best beta " << to_full_precision(e.best_beta)
              << ", j " << to_full_precision(e.best_j) << ")\n";
    return kExitNoConvergence;
  } catch (const NoBracketError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  }
  return kExitInputError;
}
