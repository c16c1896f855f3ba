#pragma once

#include <functional>

#include "fracmax/core.hpp"
#include "fracmax/problems/ball.hpp"

namespace fracmax {

/// Result of a brute-force grid maximization.
struct OracleResult {
  Point x_star;
  double j_star = 0.0;         ///< ratio value at x_star
  long long resolution = 0;
};

/// Direct grid maximization of W0/W over [x1, x2]. The first node wins ties.
/// Throws OracleDomainError if W vanishes at a node.
///
/// The parallel kernel partitions the grid across threads and merges the
/// per-thread bests with an index-ordered tie-break, so it returns results
/// bit-identical to the serial reference. grid_max_interval dispatches to
/// the parallel kernel when OpenMP is compiled in.
OracleResult grid_max_interval(const std::function<double(double)>& w0,
                               const std::function<double(double)>& w, double x1, double x2,
                               long long resolution);
OracleResult grid_max_interval_serial(const std::function<double(double)>& w0,
                                      const std::function<double(double)>& w, double x1,
                                      double x2, long long resolution);
OracleResult grid_max_interval_parallel(const std::function<double(double)>& w0,
                                        const std::function<double(double)>& w, double x1,
                                        double x2, long long resolution);

/// Brute-force maximization of the ball problem's ratio over a polar grid of
/// the 2-dimensional disk spanned by {w0, w} inside the ball. The restriction
/// is lossless: the ratio depends on x only through <w0,x> and <w,x>, so a
/// maximizer always exists in that span. resolution counts nodes per polar
/// axis; a degenerate span (w0 parallel to w) falls back to a 1-dimensional
/// grid of the same per-axis resolution.
OracleResult disk_max_ball(const HilbertBallProblem& p, long long resolution);
OracleResult disk_max_ball_serial(const HilbertBallProblem& p, long long resolution);
OracleResult disk_max_ball_parallel(const HilbertBallProblem& p, long long resolution);

}  // namespace fracmax
