#include "fracmax/scalar_max.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracmax {

ScalarMaxResult grid_golden_max(const std::function<double(double)>& f, double a, double b,
                                int grid_n, double refine_tol) {
  if (!(a < b)) throw std::invalid_argument("grid_golden_max: requires a < b");
  if (grid_n < 2) throw std::invalid_argument("grid_golden_max: requires grid_n >= 2");
  if (!(refine_tol > 0.0))
    throw std::invalid_argument("grid_golden_max: requires refine_tol > 0");

  const double span = b - a;
  double best_x = a;
  double best_v = f(a);
  for (int i = 1; i < grid_n; ++i) {
    const double x = i == grid_n - 1 ? b : a + span * i / (grid_n - 1);
    const double v = f(x);
    if (v > best_v) {
      best_v = v;
      best_x = x;
    }
  }

  // golden-section refinement on the best node's one-spacing neighborhood
  const double step = span / (grid_n - 1);
  double lo = std::max(a, best_x - step);
  double hi = std::min(b, best_x + step);
  const double invphi = 0.6180339887498949;
  double c = hi - invphi * (hi - lo);
  double d = lo + invphi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  int guard = 0;
  while (hi - lo > refine_tol && guard++ < 400) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - invphi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + invphi * (hi - lo);
      fd = f(d);
    }
  }
  const double xm = lo + (hi - lo) / 2;
  const double vm = f(xm);
  if (vm > best_v) return {xm, vm};
  return {best_x, best_v};
}

}  // namespace fracmax
