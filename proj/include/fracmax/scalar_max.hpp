#pragma once

#include <functional>

namespace fracmax {

struct ScalarMaxResult {
  double x = 0.0;
  double value = 0.0;
};

/// Derivative-free maximization of f over [a, b]: a uniform scan of grid_n
/// nodes followed by golden-section refinement of the best node's
/// one-spacing neighborhood down to refine_tol. Deterministic: grid ties keep
/// the first node, and the refined point must strictly beat the grid best to
/// replace it.
ScalarMaxResult grid_golden_max(const std::function<double(double)>& f, double a, double b,
                                int grid_n, double refine_tol);

}  // namespace fracmax
