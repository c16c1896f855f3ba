#include "fracmax/problems/logratio.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "fracmax/errors.hpp"
#include "fracmax/rootfind.hpp"
#include "fracmax/scalar_max.hpp"

namespace fracmax {

LogRatioProblem::LogRatioProblem(Evaluator f0, Evaluator f, double x1, double x2,
                                 int grid_resolution, double refine_tolerance)
    : f0_(std::move(f0)),
      f_(std::move(f)),
      x1_(x1),
      x2_(x2),
      grid_resolution_(grid_resolution),
      refine_tolerance_(refine_tolerance) {
  if (!(x1 < x2)) throw std::invalid_argument("LogRatioProblem: requires x1 < x2");
  if (grid_resolution_ < 2)
    throw std::invalid_argument("LogRatioProblem: requires grid_resolution >= 2");
  if (!(refine_tolerance_ > 0.0))
    throw std::invalid_argument("LogRatioProblem: requires refine_tolerance > 0");
  for (int i = 0; i < grid_resolution_; ++i) {
    const double x =
        i == grid_resolution_ - 1 ? x2 : x1 + (x2 - x1) * i / (grid_resolution_ - 1);
    const double v0 = f0_(x);
    const double v = f_(x);
    if (!(v0 > 0.0))
      throw std::invalid_argument("LogRatioProblem: requires f0 > 0; sampled f0(" +
                                  std::to_string(x) + ") = " + std::to_string(v0));
    if (!(v > 1.0))
      throw std::invalid_argument("LogRatioProblem: requires f > 1; sampled f(" +
                                  std::to_string(x) + ") = " + std::to_string(v));
  }
}

double LogRatioProblem::eval_w0(const Point& x) const { return std::log(f0_(x[0])); }

double LogRatioProblem::eval_w(const Point& x) const { return std::log(f_(x[0])); }

Point LogRatioProblem::argmax_parametric(double beta, ReductionMode mode) const {
  auto goal = [&](double x) {
    const double w0 = std::log(f0_(x));
    const double w = std::log(f_(x));
    const double diff = w0 - beta * w;
    return mode == ReductionMode::Difference ? diff : w * diff;
  };
  return {grid_golden_max(goal, x1_, x2_, grid_resolution_, refine_tolerance_).x};
}

Point LogRatioProblem::seed_point() const { return {x1_ + (x2_ - x1_) / 2}; }

Solution LogRatioProblem::solve_direct(const SolverOptions& opts) const {
  return solve_ratio_max(*this, ReductionMode::Difference, opts);
}

std::pair<double, double> LogRatioProblem::gamma_of_beta(double beta) const {
  auto goal = [&](double x) { return f0_(x) * std::pow(f_(x), -beta); };
  const ScalarMaxResult m = grid_golden_max(goal, x1_, x2_, grid_resolution_, refine_tolerance_);
  if (std::isnan(m.value))
    throw Error("nested solve (inner level): f0/f^beta evaluated to NaN at beta = " +
                std::to_string(beta));
  return {m.x, m.value};
}

Solution LogRatioProblem::solve_nested(const SolverOptions& opts) const {
  opts.validate();
  Solution sol;
  int evals = 0;

  // gamma(beta) - 1 inherits the sign pattern of j: its root is the optimum
  auto phi = [&](double beta) {
    const double gamma = gamma_of_beta(beta).second;
    ++evals;
    sol.trace.emplace_back(beta, gamma - 1.0);
    return gamma - 1.0;
  };

  const double seed = ratio_value(*this, seed_point());
  double root = 0.0;
  try {
    const Bracket bracket = find_bracket(phi, seed);
    root = bisect(phi, bracket, opts).root;
  } catch (const NoBracketError& e) {
    throw NoBracketError(std::string("nested solve (outer level): ") + e.what(), e.last_lo,
                         e.last_hi);
  } catch (const NonConvergenceError& e) {
    throw NonConvergenceError(std::string("nested solve (outer level): ") + e.what(),
                              e.best_beta, e.best_j, sol.trace);
  }

  const auto [x_star, gamma_star] = gamma_of_beta(root);
  sol.beta_max = root;
  sol.x_max = {x_star};
  sol.residual = std::abs(gamma_star - 1.0);
  sol.iterations = evals;
  if (sol.trace.empty() || sol.trace.back().first != root)
    sol.trace.emplace_back(root, gamma_star - 1.0);
  return sol;
}

}  // namespace fracmax
