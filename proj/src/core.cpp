#include "fracmax/core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "fracmax/errors.hpp"
#include "fracmax/rootfind.hpp"

namespace fracmax {

void SolverOptions::validate() const {
  if (!(tolerance_j > 0.0))
    throw std::invalid_argument("SolverOptions: tolerance_j must be > 0");
  if (!(tolerance_beta > 0.0))
    throw std::invalid_argument("SolverOptions: tolerance_beta must be > 0");
  if (max_iterations < 1)
    throw std::invalid_argument("SolverOptions: max_iterations must be >= 1");
}

double parametric_value(const RatioProblem& problem, const Point& x, double beta,
                        ReductionMode mode) {
  const double w0 = problem.eval_w0(x);
  const double w = problem.eval_w(x);
  const double diff = w0 - beta * w;
  return mode == ReductionMode::Difference ? diff : w * diff;
}

double ratio_value(const RatioProblem& problem, const Point& x) {
  const double w = problem.eval_w(x);
  if (w == 0.0) throw DivisionDomainError("ratio_value: W(x) == 0");
  return problem.eval_w0(x) / w;
}

std::pair<Point, double> evaluate_j(const RatioProblem& problem, double beta,
                                    ReductionMode mode) {
  Point x = problem.argmax_parametric(beta, mode);
  const double w = problem.eval_w(x);
  if (mode == ReductionMode::Difference && !(w > 0.0))
    throw ModeViolationError("difference mode requires W > 0; got W = " + std::to_string(w) +
                             " at the parametric maximizer (beta = " + std::to_string(beta) +
                             ")");
  if (mode == ReductionMode::WeightedDifference && w == 0.0)
    throw ModeViolationError(
        "weighted-difference mode requires W != 0 at the parametric maximizer (beta = " +
        std::to_string(beta) + ")");
  const double diff = problem.eval_w0(x) - beta * w;
  const double j = mode == ReductionMode::Difference ? diff : w * diff;
  return {std::move(x), j};
}

double dinkelbach_step(const RatioProblem& problem, double beta) {
  Point x = problem.argmax_parametric(beta, ReductionMode::Difference);
  const double w = problem.eval_w(x);
  if (!(w > 0.0))
    throw ModeViolationError("dinkelbach_step requires W > 0; got W = " + std::to_string(w));
  return problem.eval_w0(x) / w;
}

namespace {

// Pure fixed-point iteration beta <- J(x_beta). Termination on |j| only;
// the iterates climb monotonically toward the root from below.
double run_dinkelbach(const RatioProblem& problem, double beta0, const SolverOptions& opts,
                      int& evals, std::vector<std::pair<double, double>>& trace) {
  double beta = beta0;
  double j = 0.0;
  for (int it = 0; it < opts.max_iterations; ++it) {
    auto [x, jv] = evaluate_j(problem, beta, ReductionMode::Difference);
    j = jv;
    ++evals;
    trace.emplace_back(beta, j);
    if (std::abs(j) <= opts.tolerance_j) return beta;
    const double next = ratio_value(problem, x);
    if (next == beta)
      throw NonConvergenceError("dinkelbach iteration stalled at beta = " +
                                    std::to_string(beta) + " with |j| above tolerance",
                                beta, j);
    beta = next;
  }
  throw NonConvergenceError("dinkelbach iteration exceeded max_iterations", beta, j);
}

}  // namespace

Solution solve_ratio_max(const RatioProblem& problem, ReductionMode mode,
                         const SolverOptions& opts) {
  opts.validate();
  if (mode == ReductionMode::WeightedDifference && opts.strategy == Strategy::Dinkelbach)
    throw UnsupportedStrategyError(
        "dinkelbach iteration is defined for the difference mode only; "
        "use bisection or hybrid for the weighted difference");

  Solution sol;
  int evals = 0;
  auto j_of = [&](double beta) {
    auto [x, j] = evaluate_j(problem, beta, mode);
    ++evals;
    sol.trace.emplace_back(beta, j);
    return j;
  };

  const double seed = ratio_value(problem, problem.seed_point());

  double root = 0.0;
  try {
    if (opts.strategy == Strategy::Dinkelbach) {
      root = run_dinkelbach(problem, seed, opts, evals, sol.trace);
    } else {
      Bracket bracket = find_bracket(j_of, seed);
      if (opts.strategy == Strategy::Bisection || mode == ReductionMode::WeightedDifference) {
        root = bisect(j_of, bracket, opts).root;
      } else {
        auto propose = [&problem](double beta) { return dinkelbach_step(problem, beta); };
        root = hybrid_solve(j_of, propose, bracket, opts).root;
      }
    }
  } catch (const NonConvergenceError& e) {
    throw NonConvergenceError(e.what(), e.best_beta, e.best_j, sol.trace);
  }

  sol.beta_max = root;
  sol.x_max = problem.argmax_parametric(root, mode);
  const double j_at_root = parametric_value(problem, sol.x_max, root, mode);
  sol.residual = std::abs(j_at_root);
  sol.iterations = evals;
  if (sol.trace.empty() || sol.trace.back().first != root)
    sol.trace.emplace_back(root, j_at_root);
  return sol;
}

}  // namespace fracmax
