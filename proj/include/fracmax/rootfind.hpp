#pragma once

#include <functional>

#include "fracmax/core.hpp"

namespace fracmax {

using ScalarFn = std::function<double(double)>;

/// An interval certified to contain the root of j. Orientation is fixed:
/// j is positive at the left end and negative at the right end, which is the
/// sign pattern j exhibits around the optimal ratio. A bracket with the
/// opposite orientation is rejected, not swapped.
struct Bracket {
  double beta_lo = 0.0;
  double beta_hi = 0.0;
  double j_lo = 0.0;
  double j_hi = 0.0;

  void validate() const;  // throws std::invalid_argument
};

struct RootReport {
  double root = 0.0;
  int evaluations = 0;  ///< calls made to the j evaluator
  double final_bracket_width = 0.0;
};

/// Geometric expansion around beta_seed until the sign change of j is pinned
/// down. Starts from a half-width of 1 and widens by expansion_factor per
/// step. Calls the evaluator at most 2*budget + 1 times; throws
/// NoBracketError when the budget runs out.
Bracket find_bracket(const ScalarFn& j, double beta_seed, double expansion_factor = 2.0,
                     int budget = 64);

/// Plain bisection on an oriented bracket. Stops when |j| <= tolerance_j or
/// the bracket width falls below tolerance_beta.
RootReport bisect(const ScalarFn& j, Bracket bracket, const SolverOptions& opts);

/// Bisection safeguarded by a proposal map. Each iteration asks the proposer
/// for a step from the current iterate; the step is taken only if it lands
/// strictly inside the current bracket, otherwise the midpoint is used. A
/// proposal that fails to shrink the bracket by half forces a bisection step
/// next, so the width decreases geometrically no matter what the proposer
/// does.
RootReport hybrid_solve(const ScalarFn& j, const ScalarFn& propose, Bracket bracket,
                        const SolverOptions& opts);

}  // namespace fracmax
