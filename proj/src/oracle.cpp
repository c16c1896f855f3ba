#include "fracmax/oracle.hpp"

#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracmax/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fracmax {

namespace {

constexpr long long kNoBadNode = std::numeric_limits<long long>::max();

struct BestNode {
  double value = -std::numeric_limits<double>::infinity();
  long long idx = -1;
};

// total order: larger value wins, equal values keep the smaller index
inline bool improves(double value, long long idx, const BestNode& best) {
  if (value > best.value) return true;
  return value == best.value && (best.idx < 0 || idx < best.idx);
}

inline void merge(BestNode& into, const BestNode& other) {
  if (other.idx >= 0 && improves(other.value, other.idx, into)) into = other;
}

inline double interval_node(double x1, double x2, long long i, long long resolution) {
  return i == resolution - 1 ? x2 : x1 + (x2 - x1) * static_cast<double>(i) /
                                        static_cast<double>(resolution - 1);
}

void check_interval_args(double x1, double x2, long long resolution) {
  if (!(x1 < x2)) throw std::invalid_argument("grid_max_interval: requires x1 < x2");
  if (resolution < 2)
    throw std::invalid_argument("grid_max_interval: requires resolution >= 2");
}

[[noreturn]] void throw_bad_node(double x, long long i) {
  throw OracleDomainError("oracle grid: W vanished at node " + std::to_string(i) +
                          " (x = " + std::to_string(x) + ")");
}

}  // namespace

OracleResult grid_max_interval_serial(const std::function<double(double)>& w0,
                                      const std::function<double(double)>& w, double x1,
                                      double x2, long long resolution) {
  check_interval_args(x1, x2, resolution);
  BestNode best;
  for (long long i = 0; i < resolution; ++i) {
    const double x = interval_node(x1, x2, i, resolution);
    const double den = w(x);
    if (den == 0.0) throw_bad_node(x, i);
    const double v = w0(x) / den;
    if (improves(v, i, best)) best = {v, i};
  }
  return {{interval_node(x1, x2, best.idx, resolution)}, best.value, resolution};
}

OracleResult grid_max_interval_parallel(const std::function<double(double)>& w0,
                                        const std::function<double(double)>& w, double x1,
                                        double x2, long long resolution) {
  check_interval_args(x1, x2, resolution);
  BestNode best;
  std::atomic<long long> bad{kNoBadNode};

#ifdef _OPENMP
#pragma omp parallel
  {
    BestNode local;
#pragma omp for schedule(static) nowait
    for (long long i = 0; i < resolution; ++i) {
      const double x = interval_node(x1, x2, i, resolution);
      const double den = w(x);
      if (den == 0.0) {
        long long seen = bad.load(std::memory_order_relaxed);
        while (i < seen && !bad.compare_exchange_weak(seen, i)) {
        }
        continue;
      }
      const double v = w0(x) / den;
      if (improves(v, i, local)) local = {v, i};
    }
#pragma omp critical(fracmax_oracle_merge)
    merge(best, local);
  }
#else
  return grid_max_interval_serial(w0, w, x1, x2, resolution);
#endif

  if (bad.load() != kNoBadNode) {
    const long long i = bad.load();
    throw_bad_node(interval_node(x1, x2, i, resolution), i);
  }
  return {{interval_node(x1, x2, best.idx, resolution)}, best.value, resolution};
}

OracleResult grid_max_interval(const std::function<double(double)>& w0,
                               const std::function<double(double)>& w, double x1, double x2,
                               long long resolution) {
#ifdef _OPENMP
  return grid_max_interval_parallel(w0, w, x1, x2, resolution);
#else
  return grid_max_interval_serial(w0, w, x1, x2, resolution);
#endif
}

namespace {

// 2-d frame of span{w0, w} plus the ratio coefficients expressed in it.
struct DiskFrame {
  std::vector<double> u, v;  // v empty when the span is 1-dimensional
  double a1 = 0.0, a2 = 0.0;  // <w0,u>, <w0,v>
  double b1 = 0.0, b2 = 0.0;  // <w,u>, <w,v>
};

DiskFrame make_frame(const HilbertBallProblem& p) {
  const std::vector<double>& w0 = p.w0();
  const std::vector<double>& w = p.w();
  const std::size_t n = w0.size();

  auto dot = [n](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
  };

  const double n0 = std::sqrt(dot(w0, w0));
  const double nw = std::sqrt(dot(w, w));
  if (n0 == 0.0 && nw == 0.0)
    throw std::invalid_argument("disk_max_ball: w0 and w must not both be zero");

  DiskFrame fr;
  const std::vector<double>& primary = n0 > 0.0 ? w0 : w;
  const double pn = n0 > 0.0 ? n0 : nw;
  fr.u.resize(n);
  for (std::size_t i = 0; i < n; ++i) fr.u[i] = primary[i] / pn;

  const std::vector<double>& secondary = n0 > 0.0 ? w : w0;
  const double proj = dot(secondary, fr.u);
  std::vector<double> g(n);
  double gn2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = secondary[i] - proj * fr.u[i];
    gn2 += g[i] * g[i];
  }
  const double gn = std::sqrt(gn2);
  if (gn > 0.0) {
    fr.v.resize(n);
    for (std::size_t i = 0; i < n; ++i) fr.v[i] = g[i] / gn;
  }

  fr.a1 = dot(w0, fr.u);
  fr.b1 = dot(w, fr.u);
  if (!fr.v.empty()) {
    fr.a2 = dot(w0, fr.v);
    fr.b2 = dot(w, fr.v);
  }
  return fr;
}

Point lift(const DiskFrame& fr, double s, double t) {
  Point x(fr.u.size());
  for (std::size_t i = 0; i < fr.u.size(); ++i)
    x[i] = s * fr.u[i] + (fr.v.empty() ? 0.0 : t * fr.v[i]);
  return x;
}

OracleResult disk_max_ball_impl(const HilbertBallProblem& p, long long resolution,
                                bool parallel) {
  if (resolution < 2)
    throw std::invalid_argument("disk_max_ball: requires resolution >= 2");
  const DiskFrame fr = make_frame(p);
  const double r = p.radius();
  const double h0 = p.h0();
  const double h = p.h();

  if (fr.v.empty()) {
    // degenerate span: scan the diameter along u
    auto w0fn = [&](double s) { return fr.a1 * s + h0; };
    auto wfn = [&](double s) { return fr.b1 * s + h; };
    OracleResult res = parallel
                           ? grid_max_interval_parallel(w0fn, wfn, -r, r, resolution)
                           : grid_max_interval_serial(w0fn, wfn, -r, r, resolution);
    return {lift(fr, res.x_star[0], 0.0), res.j_star, resolution};
  }

  const long long k = resolution;
  // shared trig tables keep the serial and parallel kernels bit-identical
  std::vector<double> cs(static_cast<std::size_t>(k)), sn(static_cast<std::size_t>(k));
  constexpr double kTwoPi = 6.283185307179586;
  for (long long ia = 0; ia < k; ++ia) {
    const double th = kTwoPi * static_cast<double>(ia) / static_cast<double>(k);
    cs[static_cast<std::size_t>(ia)] = std::cos(th);
    sn[static_cast<std::size_t>(ia)] = std::sin(th);
  }

  BestNode best;
  std::atomic<long long> bad{kNoBadNode};

  // rings at r*(ir+1)/k and angles at 2*pi*ia/k: doubling k yields a strict
  // superset of the nodes, so refining never loses the incumbent maximum
  auto row_scan = [&](long long ir, BestNode& local) {
    const double rho = r * static_cast<double>(ir + 1) / static_cast<double>(k);
    for (long long ia = 0; ia < k; ++ia) {
      const double s = rho * cs[static_cast<std::size_t>(ia)];
      const double t = rho * sn[static_cast<std::size_t>(ia)];
      const double den = fr.b1 * s + fr.b2 * t + h;
      const long long idx = ir * k + ia;
      if (den == 0.0) {
        long long seen = bad.load(std::memory_order_relaxed);
        while (idx < seen && !bad.compare_exchange_weak(seen, idx)) {
        }
        continue;
      }
      const double v = (fr.a1 * s + fr.a2 * t + h0) / den;
      if (improves(v, idx, local)) local = {v, idx};
    }
  };

  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel
    {
      BestNode local;
#pragma omp for schedule(static) nowait
      for (long long ir = 0; ir < k; ++ir) row_scan(ir, local);
#pragma omp critical(fracmax_oracle_merge)
      merge(best, local);
    }
#else
    for (long long ir = 0; ir < k; ++ir) row_scan(ir, best);
#endif
  } else {
    for (long long ir = 0; ir < k; ++ir) row_scan(ir, best);
  }

  if (bad.load() != kNoBadNode)
    throw OracleDomainError("disk_max_ball: W vanished at polar node " +
                            std::to_string(bad.load()));

  const long long ir = best.idx / k;
  const long long ia = best.idx % k;
  const double rho = r * static_cast<double>(ir + 1) / static_cast<double>(k);
  const double s = rho * cs[static_cast<std::size_t>(ia)];
  const double t = rho * sn[static_cast<std::size_t>(ia)];
  return {lift(fr, s, t), best.value, resolution};
}

}  // namespace

OracleResult disk_max_ball_serial(const HilbertBallProblem& p, long long resolution) {
  return disk_max_ball_impl(p, resolution, false);
}

OracleResult disk_max_ball_parallel(const HilbertBallProblem& p, long long resolution) {
  return disk_max_ball_impl(p, resolution, true);
}

OracleResult disk_max_ball(const HilbertBallProblem& p, long long resolution) {
#ifdef _OPENMP
  return disk_max_ball_parallel(p, resolution);
#else
  return disk_max_ball_serial(p, resolution);
#endif
}

}  // namespace fracmax
