#pragma once

#include <string>
#include <vector>

#include "fracmax/core.hpp"
#include "fracmax/problems/ball.hpp"

namespace fracmax {

/// One row of a beta sweep.
struct CurveSample {
  double beta = 0.0;
  double j = 0.0;
  double ratio_at_xbeta = 0.0;  ///< J(x_beta) = W0(x_beta)/W(x_beta)
};

/// Evaluates (beta, j(beta), J(x_beta)) over a uniform grid of `samples`
/// points from beta_from to beta_to. Rows are independent and evaluated in
/// parallel when OpenMP is available, but always emitted in grid order.
/// samples == 1 produces the single row at beta_from.
std::vector<CurveSample> sample_curve(const RatioProblem& problem, ReductionMode mode,
                                      double beta_from, double beta_to, int samples);

/// CSV with header "beta,j,ratio_at_xbeta" and 17-significant-digit fields.
std::string curve_csv(const std::vector<CurveSample>& rows);

/// CSV with header "beta,y1,y2,y3,y4" and 17-significant-digit fields.
std::string asymptote_csv(const std::vector<AsymptoteSample>& rows);

}  // namespace fracmax
