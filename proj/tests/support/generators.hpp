#pragma once

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "fracmax/problems/ball.hpp"
#include "fracmax/problems/linear.hpp"
#include "fracmax/problems/logratio.hpp"
#include "fracmax/problems/quadratic.hpp"

namespace testgen {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double l2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Coefficients follow the magnitude range of the bundled reference problems:
// uniform draws from [-10, 10], redrawn until the family invariants hold.
// min_w keeps the denominator bounded away from zero so grid-gap bounds in
// the oracle comparisons stay meaningful; min_det skips near-constant ratios
// when a test needs a unique endpoint winner.
inline fracmax::LinearIntervalProblem random_linear(Rng& rng, double min_w = 0.5,
                                                    double min_det = 0.0) {
  for (;;) {
    const double a = uniform(rng, 0.05, 10.0);
    const double b = uniform(rng, -10.0, 10.0);
    const double a0 = uniform(rng, -10.0, 10.0);
    const double b0 = uniform(rng, -10.0, 10.0);
    double x1 = uniform(rng, -10.0, 10.0);
    double x2 = uniform(rng, -10.0, 10.0);
    if (x1 > x2) std::swap(x1, x2);
    if (x2 - x1 < 1e-2) continue;
    if (a * x1 + b < min_w || a * x2 + b < min_w) continue;
    if (min_det > 0.0 && std::abs(a * b0 - b * a0) < min_det) continue;
    return {a, b, a0, b0, x1, x2};
  }
}

inline fracmax::QuadraticIntervalProblem random_quadratic(Rng& rng, double min_w = 0.5) {
  for (;;) {
    const double a = uniform(rng, 0.05, 10.0);
    const double b = uniform(rng, -10.0, 10.0);
    const double c = uniform(rng, -10.0, 10.0);
    const double a0 = uniform(rng, -10.0, 10.0);
    const double b0 = uniform(rng, -10.0, 10.0);
    const double c0 = uniform(rng, -10.0, 10.0);
    double x1 = uniform(rng, -10.0, 10.0);
    double x2 = uniform(rng, -10.0, 10.0);
    if (x1 > x2) std::swap(x1, x2);
    if (x2 - x1 < 1e-2) continue;
    auto w = [&](double x) { return (a * x + b) * x + c; };
    if (w(x1) < min_w || w(x2) < min_w) continue;
    const double xv = -b / (2.0 * a);
    if (xv > x1 && xv < x2 && w(xv) < min_w) continue;
    return {a, b, c, a0, b0, c0, x1, x2};
  }
}

// h is drawn as r*||w|| plus a positive margin instead of being redrawn from
// the box, so generation terminates for every w.
inline fracmax::HilbertBallProblem random_ball(Rng& rng, int max_dim = 16) {
  const int n = uniform_int(rng, 2, max_dim);
  std::vector<double> w0(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
  for (double& v : w0) v = uniform(rng, -10.0, 10.0);
  for (double& v : w) v = uniform(rng, -10.0, 10.0);
  const double r = uniform(rng, 0.1, 2.0);
  const double h = r * l2(w) + uniform(rng, 0.1, 10.0);
  const double h0 = uniform(rng, -10.0, 10.0);
  return {std::move(w0), std::move(w), h0, h, r};
}

// Gentler draws for disk-oracle comparisons: moderate coefficients plus a fat
// positivity margin keep the ratio's curvature low enough for a polar grid to
// resolve it to 0.01.
inline fracmax::HilbertBallProblem random_ball_tame(Rng& rng) {
  const int n = uniform_int(rng, 2, 10);
  std::vector<double> w0(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
  for (double& v : w0) v = uniform(rng, -3.0, 3.0);
  for (double& v : w) v = uniform(rng, -3.0, 3.0);
  const double r = uniform(rng, 0.5, 1.5);
  const double h = r * l2(w) + uniform(rng, 2.0, 5.0);
  const double h0 = uniform(rng, -5.0, 5.0);
  return {std::move(w0), std::move(w), h0, h, r};
}

// Smooth log-ratio instances: ln f0 is a quadratic polynomial and
// f = 1 + exp(quadratic), so f0 > 0 and f > 1 hold everywhere by
// construction and ln f stays usefully far from zero on short intervals.
struct LogRatioCoeffs {
  double p2, p1, p0;  // ln f0(x) = p2 x^2 + p1 x + p0
  double q2, q1, q0;  // f(x) = 1 + exp(q2 x^2 + q1 x + q0)
  double x1, x2;
};

inline LogRatioCoeffs random_logratio_coeffs(Rng& rng) {
  for (;;) {
    LogRatioCoeffs c;
    c.p2 = uniform(rng, -1.0, 1.0);
    c.p1 = uniform(rng, -1.0, 1.0);
    c.p0 = uniform(rng, -1.0, 1.0);
    c.q2 = uniform(rng, -1.0, 1.0);
    c.q1 = uniform(rng, -1.0, 1.0);
    c.q0 = uniform(rng, -1.0, 1.0);
    c.x1 = uniform(rng, -1.5, 1.5);
    c.x2 = uniform(rng, -1.5, 1.5);
    if (c.x1 > c.x2) std::swap(c.x1, c.x2);
    if (c.x2 - c.x1 < 0.5) continue;
    return c;
  }
}

inline fracmax::LogRatioProblem make_logratio(const LogRatioCoeffs& c, int grid = 1025,
                                              double refine = 1e-12) {
  auto f0 = [c](double x) { return std::exp((c.p2 * x + c.p1) * x + c.p0); };
  auto f = [c](double x) { return 1.0 + std::exp((c.q2 * x + c.q1) * x + c.q0); };
  return {f0, f, c.x1, c.x2, grid, refine};
}

}  // namespace testgen
