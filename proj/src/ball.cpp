#include "fracmax/problems/ball.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fracmax/errors.hpp"
#include "fracmax/polyroots.hpp"

namespace fracmax {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace

HilbertBallProblem::HilbertBallProblem(std::vector<double> w0, std::vector<double> w,
                                       double h0, double h, double r)
    : w0_(std::move(w0)), w_(std::move(w)), h0_(h0), h_(h), r_(r) {
  if (w0_.empty() || w0_.size() != w_.size())
    throw std::invalid_argument(
        "HilbertBallProblem: w0 and w must be nonempty and of equal dimension");
  if (!(r > 0.0)) throw std::invalid_argument("HilbertBallProblem: requires r > 0");
  norm2_w0_ = dot(w0_, w0_);
  norm2_w_ = dot(w_, w_);
  dot_w0_w_ = dot(w0_, w_);
  norm_w0_ = std::sqrt(norm2_w0_);
  norm_w_ = std::sqrt(norm2_w_);
  if (!(h > r * norm_w_))
    throw std::invalid_argument("HilbertBallProblem: requires h > r*||w|| (got h = " +
                                std::to_string(h) + ", r*||w|| = " +
                                std::to_string(r * norm_w_) + ")");
}

double HilbertBallProblem::eval_w0(const Point& x) const { return dot(w0_, x) + h0_; }

double HilbertBallProblem::eval_w(const Point& x) const { return dot(w_, x) + h_; }

Point HilbertBallProblem::argmax(double beta) const {
  Point wb(w0_.size());
  double n2 = 0.0;
  for (std::size_t i = 0; i < wb.size(); ++i) {
    wb[i] = w0_[i] - beta * w_[i];
    n2 += wb[i] * wb[i];
  }
  const double nb = std::sqrt(n2);
  if (nb == 0.0) {
    // J_beta is constant on the ball; pick a fixed sphere point
    Point e1(w0_.size(), 0.0);
    e1[0] = r_;
    return e1;
  }
  for (double& v : wb) v *= r_ / nb;
  return wb;
}

double HilbertBallProblem::j_value(double beta) const {
  double n2 = 0.0;
  for (std::size_t i = 0; i < w0_.size(); ++i) {
    const double d = w0_[i] - beta * w_[i];
    n2 += d * d;
  }
  return r_ * std::sqrt(n2) + h0_ - beta * h_;
}

Point HilbertBallProblem::argmax_parametric(double beta, ReductionMode mode) const {
  if (mode == ReductionMode::Difference) return argmax(beta);
  return argmax_weighted(beta);
}

Point HilbertBallProblem::seed_point() const { return Point(w0_.size(), 0.0); }

Solution HilbertBallProblem::solve_closed_form() const {
  const double A = r_ * r_ * norm2_w_ - h_ * h_;  // < 0 by validity
  const double B = -2.0 * (r_ * r_ * dot_w0_w_ - h0_ * h_);
  const double C = r_ * r_ * norm2_w0_ - h0_ * h0_;

  QuadraticRoots qr = solve_quadratic_real(A, B, C);
  if (qr.count == 0) {
    // rounding can push the discriminant of a true double root (nearly
    // proportional data) just below zero; the vertex is that root, and the
    // residual check below decides whether it really solves the equation
    qr.count = 1;
    qr.roots[0] = -B / (2.0 * A);
    if (!std::isfinite(qr.roots[0]) ||
        std::abs(j_value(qr.roots[0])) >
            1e-8 * (1.0 + std::abs(h0_) + std::abs(qr.roots[0]) * h_))
      throw InternalInconsistencyError(
          "ball solve: squared root equation has no real roots for a valid problem");
  }

  // keep roots compatible with r*||w_beta|| = beta*h - h0 >= 0; a hair of
  // slack absorbs rounding in the quadratic
  double best = 0.0;
  double best_res = -1.0;
  for (int i = 0; i < qr.count; ++i) {
    const double beta = qr.roots[i];
    const double slack = 1e-12 * (std::abs(beta) * h_ + std::abs(h0_) + 1.0);
    if (beta * h_ - h0_ < -slack) continue;
    const double res = std::abs(j_value(beta));
    if (best_res < 0.0 || res < best_res) {
      best = beta;
      best_res = res;
    }
  }
  if (best_res < 0.0)
    throw InternalInconsistencyError(
        "ball solve: no root satisfies the sign condition beta*h - h0 >= 0");

  Solution s;
  s.beta_max = best;
  s.x_max = argmax(best);
  s.residual = best_res;
  s.iterations = 0;
  s.trace = {{best, j_value(best)}};
  return s;
}

double HilbertBallProblem::asymptotic_estimate() const {
  if (norm_w_ == 0.0)
    throw EstimateUndefinedError(
        "asymptotic estimate undefined: w = 0 leaves no asymptote direction");
  const double proj_w0 = dot_w0_w_ / norm_w_;  // <w0, w/||w||>
  if (h0_ + r_ * norm_w0_ > 0.0) {
    const double den = h_ - r_ * norm_w_;
    if (den == 0.0)
      throw EstimateUndefinedError("asymptotic estimate undefined: zero denominator");
    return (h0_ - r_ * proj_w0) / den;
  }
  const double den = h_ + r_ * norm_w_;
  if (den == 0.0)
    throw EstimateUndefinedError("asymptotic estimate undefined: zero denominator");
  return (h0_ + r_ * proj_w0) / den;
}

std::vector<AsymptoteSample> HilbertBallProblem::asymptote_curves(
    const std::vector<double>& beta_grid) const {
  const double proj_w0 = norm_w_ == 0.0 ? 0.0 : dot_w0_w_ / norm_w_;
  std::vector<AsymptoteSample> rows;
  rows.reserve(beta_grid.size());
  for (const double beta : beta_grid) {
    AsymptoteSample s;
    s.beta = beta;
    double n2 = 0.0;
    for (std::size_t i = 0; i < w0_.size(); ++i) {
      const double d = w0_[i] - beta * w_[i];
      n2 += d * d;
    }
    s.y1 = r_ * std::sqrt(n2);
    s.y2 = beta * h_ - h0_;
    s.y3 = -r_ * norm_w_ * beta + r_ * proj_w0;
    s.y4 = r_ * norm_w_ * beta - r_ * proj_w0;
    rows.push_back(s);
  }
  return rows;
}

// Weighted-difference maximizer of q(x) = (<w,x> + h)(<w_beta,x> + h_beta)
// over the ball. q depends on x only through the span of {w, w_beta}, and
// W > 0 on the ball pushes every stationary point onto the boundary sphere,
// so the search reduces to a circle in that span. The circle derivative is a
// degree-2 trigonometric polynomial with at most four zeros; they are
// isolated by a sign scan and bisected to machine precision, with a
// golden-style fallback around the best sampled node for degenerate cases.
Point HilbertBallProblem::argmax_weighted(double beta) const {
  const std::size_t n = w0_.size();
  const double h_beta = h0_ - beta * h_;
  std::vector<double> wb(n);
  for (std::size_t i = 0; i < n; ++i) wb[i] = w0_[i] - beta * w_[i];
  const double norm_wb = norm(wb);

  auto scaled_dir = [&](const std::vector<double>& dir, double dir_norm,
                        double sign) -> Point {
    Point x(n, 0.0);
    if (dir_norm == 0.0) {
      x[0] = r_;
      return x;
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = sign * r_ * dir[i] / dir_norm;
    return x;
  };

  if (norm_w_ == 0.0) {
    // W is the constant h > 0: maximize the affine factor
    return scaled_dir(wb, norm_wb, 1.0);
  }
  if (norm_wb == 0.0) {
    // q = W * h_beta: the sign of h_beta decides which extreme of W wins
    if (h_beta > 0.0) return scaled_dir(w_, norm_w_, 1.0);
    if (h_beta < 0.0) return scaled_dir(w_, norm_w_, -1.0);
    Point x(n, 0.0);
    x[0] = r_;
    return x;
  }

  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = w_[i] / norm_w_;
  const double gamma = dot(wb, u);
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = wb[i] - gamma * u[i];
  const double delta = norm(g);

  const double alpha = norm_w_;
  if (delta == 0.0) {
    // collinear span: q along x = z*u is a plain quadratic on [-r, r]
    const double A = alpha * gamma;
    const double B = alpha * h_beta + gamma * h_;
    auto qz = [&](double z) { return (alpha * z + h_) * (gamma * z + h_beta); };
    double best_z = -r_;
    double best_v = qz(-r_);
    if (A != 0.0) {
      const double zv = -B / (2.0 * A);
      if (zv > -r_ && zv < r_ && qz(zv) > best_v) {
        best_z = zv;
        best_v = qz(zv);
      }
    }
    if (qz(r_) > best_v) best_z = r_;
    Point x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = best_z * u[i];
    return x;
  }

  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = g[i] / delta;

  auto qf = [&](double th) {
    const double cs = std::cos(th);
    const double sn = std::sin(th);
    return (alpha * r_ * cs + h_) * ((gamma * cs + delta * sn) * r_ + h_beta);
  };
  auto qd = [&](double th) {
    const double cs = std::cos(th);
    const double sn = std::sin(th);
    const double f1 = alpha * r_ * cs + h_;
    const double f1p = -alpha * r_ * sn;
    const double f2 = (gamma * cs + delta * sn) * r_ + h_beta;
    const double f2p = (-gamma * sn + delta * cs) * r_;
    return f1p * f2 + f1 * f2p;
  };

  constexpr int kScan = 256;
  constexpr double kTwoPi = 6.283185307179586;
  double best_th = 0.0;
  double best_v = qf(0.0);
  double d_prev = qd(0.0);
  double best_sample_th = 0.0;
  double best_sample_v = best_v;

  for (int k = 1; k <= kScan; ++k) {
    const double th = kTwoPi * k / kScan;
    const double d_here = qd(th);
    if (d_prev * d_here < 0.0) {
      double lo = kTwoPi * (k - 1) / kScan;
      double hi = th;
      double d_lo = d_prev;
      for (int it = 0; it < 70; ++it) {
        const double mid = lo + (hi - lo) / 2;
        const double dm = qd(mid);
        if (dm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((d_lo > 0.0) == (dm > 0.0)) {
          lo = mid;
          d_lo = dm;
        } else {
          hi = mid;
        }
      }
      const double th_root = lo + (hi - lo) / 2;
      const double val = qf(th_root);
      if (val > best_v) {
        best_v = val;
        best_th = th_root;
      }
    }
    if (k < kScan) {
      const double val = qf(th);
      if (val > best_sample_v) {
        best_sample_v = val;
        best_sample_th = th;
      }
    }
    d_prev = d_here;
  }

  // fallback for tangential zeros the sign scan cannot see: refine around the
  // best raw sample
  {
    double lo = best_sample_th - kTwoPi / kScan;
    double hi = best_sample_th + kTwoPi / kScan;
    const double invphi = 0.6180339887498949;
    double c = hi - invphi * (hi - lo);
    double d = lo + invphi * (hi - lo);
    double fc = qf(c);
    double fd = qf(d);
    for (int it = 0; it < 120 && hi - lo > 1e-15; ++it) {
      if (fc >= fd) {
        hi = d;
        d = c;
        fd = fc;
        c = hi - invphi * (hi - lo);
        fc = qf(c);
      } else {
        lo = c;
        c = d;
        fc = fd;
        d = lo + invphi * (hi - lo);
        fd = qf(d);
      }
    }
    const double th = lo + (hi - lo) / 2;
    if (qf(th) > best_v) {
      best_v = qf(th);
      best_th = th;
    }
  }

  const double s = r_ * std::cos(best_th);
  const double t = r_ * std::sin(best_th);
  Point x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = s * u[i] + t * v[i];
  return x;
}

}  // namespace fracmax
