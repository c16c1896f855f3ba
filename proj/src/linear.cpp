#include "fracmax/problems/linear.hpp"

#include <stdexcept>
#include <string>

namespace fracmax {

LinearIntervalProblem::LinearIntervalProblem(double a, double b, double a0, double b0,
                                             double x1, double x2)
    : a_(a), b_(b), a0_(a0), b0_(b0), x1_(x1), x2_(x2) {
  if (!(x1 < x2)) throw std::invalid_argument("LinearIntervalProblem: requires x1 < x2");
  if (!(a > 0.0)) throw std::invalid_argument("LinearIntervalProblem: requires a > 0");
  if (!(a * x1 + b > 0.0))
    throw std::invalid_argument("LinearIntervalProblem: requires a*x1 + b > 0, got " +
                                std::to_string(a * x1 + b));
  if (!(a * x2 + b > 0.0))
    throw std::invalid_argument("LinearIntervalProblem: requires a*x2 + b > 0, got " +
                                std::to_string(a * x2 + b));
}

double LinearIntervalProblem::eval_w0(const Point& x) const { return a0_ * x[0] + b0_; }

double LinearIntervalProblem::eval_w(const Point& x) const { return a_ * x[0] + b_; }

double LinearIntervalProblem::argmax(double beta) const {
  // slope of J_beta is a0 - beta*a; nonpositive slope sends the max left
  return beta >= a0_ / a_ ? x1_ : x2_;
}

Point LinearIntervalProblem::argmax_parametric(double beta, ReductionMode mode) const {
  if (mode == ReductionMode::Difference) return {argmax(beta)};

  // weighted: W*(W0 - beta*W) is a quadratic in x; compare the endpoints and
  // the interior vertex, ties toward the smaller x
  const double p1 = a0_ - beta * a_;
  const double p0 = b0_ - beta * b_;
  const double A = a_ * p1;
  const double B = a_ * p0 + b_ * p1;
  auto q = [&](double x) { return (a_ * x + b_) * (p1 * x + p0); };

  double best_x = x1_;
  double best_v = q(x1_);
  if (A != 0.0) {
    const double xv = -B / (2.0 * A);
    if (xv > x1_ && xv < x2_ && q(xv) > best_v) {
      best_x = xv;
      best_v = q(xv);
    }
  }
  if (q(x2_) > best_v) best_x = x2_;
  return {best_x};
}

Point LinearIntervalProblem::seed_point() const { return {x1_ + (x2_ - x1_) / 2}; }

Solution LinearIntervalProblem::solve_closed_form() const {
  const double det = a_ * b0_ - b_ * a0_;
  const double x = det > 0.0 ? x1_ : x2_;
  Solution s;
  s.beta_max = (a0_ * x + b0_) / (a_ * x + b_);
  s.x_max = {x};
  s.residual = 0.0;
  s.iterations = 0;
  s.trace = {{s.beta_max, 0.0}};
  return s;
}

}  // namespace fracmax
