#pragma once

namespace fracmax {

struct QuadraticRoots {
  int count = 0;  ///< 0, 1 or 2 real roots
  double roots[2] = {0.0, 0.0};  ///< ascending when count == 2
};

/// Real roots of a*x^2 + b*x + c = 0 in the cancellation-free form
/// q = -(b + sign(b)*sqrt(disc))/2, roots q/a and c/q. A zero leading
/// coefficient degrades to the linear case.
QuadraticRoots solve_quadratic_real(double a, double b, double c);

/// Real roots of a*x^3 + b*x^2 + c*x + d = 0 written to roots[] in ascending
/// order; returns the count. Three-real-root cases go through the
/// trigonometric form, single-root cases through the stable Cardano pairing;
/// every root is Newton-polished on the original polynomial.
int solve_cubic_real(double a, double b, double c, double d, double roots[3]);

}  // namespace fracmax
