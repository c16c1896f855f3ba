#include "fracmax/polyroots.hpp"

#include <algorithm>
#include <cmath>

namespace fracmax {

QuadraticRoots solve_quadratic_real(double a, double b, double c) {
  QuadraticRoots out;
  if (a == 0.0) {
    if (b == 0.0) return out;
    out.count = 1;
    out.roots[0] = -c / b;
    return out;
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return out;
  if (disc == 0.0) {
    out.count = 1;
    out.roots[0] = -b / (2.0 * a);
    return out;
  }
  const double s = std::sqrt(disc);
  const double q = -0.5 * (b + std::copysign(s, b));
  // q == 0 only when b == 0 and disc == 0, which is handled above
  double r0 = q / a;
  double r1 = c / q;
  if (r0 > r1) std::swap(r0, r1);
  out.count = 2;
  out.roots[0] = r0;
  out.roots[1] = r1;
  return out;
}

namespace {

double polish_cubic(double a, double b, double c, double d, double x) {
  for (int it = 0; it < 3; ++it) {
    const double f = ((a * x + b) * x + c) * x + d;
    const double df = (3.0 * a * x + 2.0 * b) * x + c;
    if (df == 0.0) break;
    const double step = f / df;
    if (!std::isfinite(step)) break;
    x -= step;
  }
  return x;
}

}  // namespace

int solve_cubic_real(double a, double b, double c, double d, double roots[3]) {
  if (a == 0.0) {
    const QuadraticRoots q = solve_quadratic_real(b, c, d);
    for (int i = 0; i < q.count; ++i) roots[i] = q.roots[i];
    return q.count;
  }

  // normalize magnitudes before forming the depressed cubic
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  const double an = a / scale, bn = b / scale, cn = c / scale, dn = d / scale;

  const double p = bn / an;
  const double q = cn / an;
  const double r = dn / an;
  const double shift = -p / 3.0;
  const double A = q - p * p / 3.0;
  const double B = (2.0 * p * p * p - 9.0 * p * q) / 27.0 + r;

  int n = 0;
  const double discr = -4.0 * A * A * A - 27.0 * B * B;
  if (discr > 0.0) {
    // three distinct real roots (A < 0 here): trigonometric form
    const double m = 2.0 * std::sqrt(-A / 3.0);
    const double arg = std::clamp(3.0 * B / (A * m), -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    constexpr double two_thirds_pi = 2.0943951023931953;
    for (int k = 0; k < 3; ++k)
      roots[n++] = shift + m * std::cos(phi - two_thirds_pi * k);
  } else if (discr == 0.0) {
    if (A == 0.0) {
      roots[n++] = shift;  // triple root
    } else {
      roots[n++] = shift + 3.0 * B / A;         // simple root
      roots[n++] = shift - 1.5 * B / A;         // double root
    }
  } else {
    // one real root: stable Cardano pairing, no opposite-sign subtraction
    const double s = std::sqrt(B * B / 4.0 + A * A * A / 27.0);
    const double u = std::cbrt(-B / 2.0 - std::copysign(s, B));
    const double t = (u == 0.0) ? 0.0 : u - A / (3.0 * u);
    roots[n++] = shift + t;
  }

  for (int i = 0; i < n; ++i) roots[i] = polish_cubic(a, b, c, d, roots[i]);
  std::sort(roots, roots + n);
  return n;
}

}  // namespace fracmax
