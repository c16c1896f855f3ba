#pragma once

#include <functional>

#include "fracmax/core.hpp"

namespace fracmax {

/// Ratio of logarithms ln f0 / ln f on an interval, for black-box evaluators
/// with f0 > 0 and f > 1 (so the denominator ln f stays positive). The
/// parametric subproblem has no closed form here; it is solved by a uniform
/// grid scan plus golden-section refinement, which keeps the evaluators
/// fully opaque.
class LogRatioProblem final : public RatioProblem {
public:
  using Evaluator = std::function<double(double)>;

  /// Validates f0 > 0 and f > 1 on every node of the construction grid.
  LogRatioProblem(Evaluator f0, Evaluator f, double x1, double x2,
                  int grid_resolution = 4097, double refine_tolerance = 1e-12);

  double x1() const { return x1_; }
  double x2() const { return x2_; }
  int grid_resolution() const { return grid_resolution_; }
  double refine_tolerance() const { return refine_tolerance_; }

  double eval_w0(const Point& x) const override;  // ln f0
  double eval_w(const Point& x) const override;   // ln f
  Point argmax_parametric(double beta, ReductionMode mode) const override;
  Point seed_point() const override;

  /// Solve through the plain difference reduction ln f0 - beta * ln f.
  Solution solve_direct(const SolverOptions& opts = {}) const;

  /// Solve through the nested scheme: for fixed beta the auxiliary problem
  /// max_x (f0 - gamma * f^beta) = 0 determines gamma(beta) = max_x f0/f^beta
  /// in closed form; the outer scalar equation gamma(beta) = 1 is then
  /// solved for beta. Failures are tagged with the nesting level.
  Solution solve_nested(const SolverOptions& opts = {}) const;

  /// gamma(beta) = max_x f0(x)/f(x)^beta together with its maximizer,
  /// returned as (x, gamma).
  std::pair<double, double> gamma_of_beta(double beta) const;

private:
  Evaluator f0_, f_;
  double x1_, x2_;
  int grid_resolution_;
  double refine_tolerance_;
};

}  // namespace fracmax
