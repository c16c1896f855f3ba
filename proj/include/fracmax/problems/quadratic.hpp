#pragma once

#include "fracmax/core.hpp"

namespace fracmax {

/// Ratio of two quadratics on an interval:
/// W(x) = a*x^2 + b*x + c, W0(x) = a0*x^2 + b0*x + c0 on [x1, x2], a > 0.
/// Construction requires W > 0 on the whole interval, which is checked at
/// both endpoints and, when the vertex -b/(2a) lies inside, at the vertex.
class QuadraticIntervalProblem final : public RatioProblem {
public:
  QuadraticIntervalProblem(double a, double b, double c, double a0, double b0, double c0,
                           double x1, double x2);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double a0() const { return a0_; }
  double b0() const { return b0_; }
  double c0() const { return c0_; }
  double x1() const { return x1_; }
  double x2() const { return x2_; }

  double eval_w0(const Point& x) const override;
  double eval_w(const Point& x) const override;
  Point argmax_parametric(double beta, ReductionMode mode) const override;
  Point seed_point() const override;

  /// Maximizer of J_beta among the endpoints and the stationary point
  /// x3 = -(b0 - beta*b) / (2*(a0 - beta*a)) when the latter is defined and
  /// falls inside [x1, x2]. Ties prefer the smaller x.
  double argmax(double beta) const;

  /// j(beta) = J_beta at the three-candidate maximizer.
  double j_value(double beta) const;

private:
  double a_, b_, c_, a0_, b0_, c0_, x1_, x2_;
};

}  // namespace fracmax
