#pragma once

#include "fracmax/core.hpp"

namespace fracmax {

/// Ratio of two affine functions on an interval:
/// W(x) = a*x + b, W0(x) = a0*x + b0 on [x1, x2], with a > 0 and W positive
/// at both endpoints (hence on the whole interval).
class LinearIntervalProblem final : public RatioProblem {
public:
  LinearIntervalProblem(double a, double b, double a0, double b0, double x1, double x2);

  double a() const { return a_; }
  double b() const { return b_; }
  double a0() const { return a0_; }
  double b0() const { return b0_; }
  double x1() const { return x1_; }
  double x2() const { return x2_; }

  double eval_w0(const Point& x) const override;
  double eval_w(const Point& x) const override;
  Point argmax_parametric(double beta, ReductionMode mode) const override;
  Point seed_point() const override;

  /// Parametric maximizer of the difference family: x1 when beta >= a0/a
  /// (the slope of J_beta is then <= 0), else x2. The boundary goes to x1.
  double argmax(double beta) const;

  /// Endpoint rule: x1 wins iff a*b0 - b*a0 > 0, otherwise x2; beta_max is
  /// the ratio at the winning endpoint. No iteration involved.
  Solution solve_closed_form() const;

private:
  double a_, b_, a0_, b0_, x1_, x2_;
};

}  // namespace fracmax
