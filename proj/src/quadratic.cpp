#include "fracmax/problems/quadratic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracmax/polyroots.hpp"

namespace fracmax {

QuadraticIntervalProblem::QuadraticIntervalProblem(double a, double b, double c, double a0,
                                                   double b0, double c0, double x1, double x2)
    : a_(a), b_(b), c_(c), a0_(a0), b0_(b0), c0_(c0), x1_(x1), x2_(x2) {
  if (!(x1 < x2)) throw std::invalid_argument("QuadraticIntervalProblem: requires x1 < x2");
  if (!(a > 0.0)) throw std::invalid_argument("QuadraticIntervalProblem: requires a > 0");
  auto w = [&](double x) { return (a * x + b) * x + c; };
  if (!(w(x1) > 0.0))
    throw std::invalid_argument("QuadraticIntervalProblem: requires W(x1) > 0, got " +
                                std::to_string(w(x1)));
  if (!(w(x2) > 0.0))
    throw std::invalid_argument("QuadraticIntervalProblem: requires W(x2) > 0, got " +
                                std::to_string(w(x2)));
  // endpoint positivity alone does not give W > 0 between them; the vertex
  // is the minimum of W since a > 0
  const double xv = -b / (2.0 * a);
  if (xv > x1 && xv < x2 && !(w(xv) > 0.0))
    throw std::invalid_argument(
        "QuadraticIntervalProblem: W must stay positive on the interval; vertex value " +
        std::to_string(w(xv)) + " at x = " + std::to_string(xv));
}

double QuadraticIntervalProblem::eval_w0(const Point& x) const {
  return (a0_ * x[0] + b0_) * x[0] + c0_;
}

double QuadraticIntervalProblem::eval_w(const Point& x) const {
  return (a_ * x[0] + b_) * x[0] + c_;
}

double QuadraticIntervalProblem::argmax(double beta) const {
  const double p2 = a0_ - beta * a_;
  const double p1 = b0_ - beta * b_;
  const double p0 = c0_ - beta * c_;
  auto jb = [&](double x) { return (p2 * x + p1) * x + p0; };

  std::vector<double> cands{x1_, x2_};
  if (p2 != 0.0) {
    const double x3 = -p1 / (2.0 * p2);
    if (x3 >= x1_ && x3 <= x2_) cands.push_back(x3);
  }
  std::sort(cands.begin(), cands.end());

  double best_x = cands.front();
  double best_v = jb(best_x);
  for (std::size_t i = 1; i < cands.size(); ++i) {
    const double v = jb(cands[i]);
    if (v > best_v) {
      best_v = v;
      best_x = cands[i];
    }
  }
  return best_x;
}

double QuadraticIntervalProblem::j_value(double beta) const {
  const double x = argmax(beta);
  return ((a0_ - beta * a_) * x + (b0_ - beta * b_)) * x + (c0_ - beta * c_);
}

Point QuadraticIntervalProblem::argmax_parametric(double beta, ReductionMode mode) const {
  if (mode == ReductionMode::Difference) return {argmax(beta)};

  // weighted: W*(W0 - beta*W) is a quartic; its interior stationary points
  // are the real roots of a cubic
  const double p2 = a0_ - beta * a_;
  const double p1 = b0_ - beta * b_;
  const double p0 = c0_ - beta * c_;
  auto q = [&](double x) {
    return ((a_ * x + b_) * x + c_) * ((p2 * x + p1) * x + p0);
  };

  const double k3 = 4.0 * a_ * p2;
  const double k2 = 3.0 * (a_ * p1 + b_ * p2);
  const double k1 = 2.0 * (a_ * p0 + b_ * p1 + c_ * p2);
  const double k0 = b_ * p0 + c_ * p1;

  std::vector<double> cands{x1_, x2_};
  double roots[3];
  const int n = solve_cubic_real(k3, k2, k1, k0, roots);
  for (int i = 0; i < n; ++i)
    if (roots[i] >= x1_ && roots[i] <= x2_) cands.push_back(roots[i]);
  std::sort(cands.begin(), cands.end());

  double best_x = cands.front();
  double best_v = q(best_x);
  for (std::size_t i = 1; i < cands.size(); ++i) {
    const double v = q(cands[i]);
    if (v > best_v) {
      best_v = v;
      best_x = cands[i];
    }
  }
  return {best_x};
}

Point QuadraticIntervalProblem::seed_point() const { return {x1_ + (x2_ - x1_) / 2}; }

}  // namespace fracmax
