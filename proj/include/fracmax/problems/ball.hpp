#pragma once

#include <vector>

#include "fracmax/core.hpp"

namespace fracmax {

/// One row of the asymptote table for the ball family.
struct AsymptoteSample {
  double beta = 0.0;
  double y1 = 0.0;  ///< r*||w0 - beta*w||
  double y2 = 0.0;  ///< beta*h - h0
  double y3 = 0.0;  ///< -r*||w||*beta + r*<w0, w/||w||>  (left asymptote of y1)
  double y4 = 0.0;  ///<  r*||w||*beta - r*<w0, w/||w||>  (right asymptote of y1)
};

/// Ratio of two affine functionals over the solid ball ||x|| <= r:
/// W(x) = <w, x> + h, W0(x) = <w0, x> + h0, with h > r*||w|| so that W stays
/// positive on the ball. The parametric maximizer is the closed form
/// x_beta = r * w_beta / ||w_beta|| with w_beta = w0 - beta*w, which turns
/// j(beta) = r*||w0 - beta*w|| + h0 - beta*h into an explicitly solvable
/// scalar equation.
class HilbertBallProblem final : public RatioProblem {
public:
  HilbertBallProblem(std::vector<double> w0, std::vector<double> w, double h0, double h,
                     double r);

  const std::vector<double>& w0() const { return w0_; }
  const std::vector<double>& w() const { return w_; }
  double h0() const { return h0_; }
  double h() const { return h_; }
  double radius() const { return r_; }
  std::size_t dim() const { return w0_.size(); }

  double eval_w0(const Point& x) const override;
  double eval_w(const Point& x) const override;
  Point argmax_parametric(double beta, ReductionMode mode) const override;
  Point seed_point() const override;

  /// Difference-mode maximizer r * w_beta / ||w_beta||. When w_beta = 0 the
  /// objective is constant on the ball and the first coordinate axis point
  /// r*e1 is returned so results stay reproducible.
  Point argmax(double beta) const;

  /// j(beta) = r*||w0 - beta*w|| + h0 - beta*h, evaluated directly.
  double j_value(double beta) const;

  /// Solves j(beta) = 0 by squaring it into
  ///   beta^2 (r^2||w||^2 - h^2) - 2 beta (r^2<w0,w> - h0 h) + r^2||w0||^2 - h0^2 = 0
  /// (leading coefficient negative by h > r||w||) and keeping the root with
  /// beta*h - h0 >= 0, the sign the un-squared equation demands.
  Solution solve_closed_form() const;

  /// A-priori estimate of the optimal ratio obtained by substituting the
  /// large-|beta| asymptote of ||w0 - beta*w|| into the root equation. The
  /// branch follows the sign of h0 + r*||w0||. Throws EstimateUndefinedError
  /// when the formula degenerates (w = 0 or a vanishing denominator).
  double asymptotic_estimate() const;

  /// Tabulates y1, y2 and both asymptote lines over the given beta grid.
  /// y1 and y2 cross exactly at the optimal ratio.
  std::vector<AsymptoteSample> asymptote_curves(const std::vector<double>& beta_grid) const;

private:
  Point argmax_weighted(double beta) const;

  std::vector<double> w0_, w_;
  double h0_, h_, r_;
  double norm2_w0_, norm2_w_, dot_w0_w_;
  double norm_w0_, norm_w_;
};

}  // namespace fracmax
