#pragma once

#include <utility>
#include <vector>

namespace fracmax {

/// A point of the feasible set. Interval problems use a single coordinate,
/// ball problems the full vector.
using Point = std::vector<double>;

/// How the ratio W0/W is reduced to a parametric family in beta.
enum class ReductionMode {
  Difference,          ///< J_beta(x) = W0(x) - beta*W(x); requires W > 0
  WeightedDifference,  ///< J_beta(x) = W(x)*(W0(x) - beta*W(x)); requires W != 0
};

enum class Strategy { Bisection, Dinkelbach, Hybrid };

struct SolverOptions {
  double tolerance_j = 1e-10;     ///< absolute tolerance on |j(beta)|
  double tolerance_beta = 1e-12;  ///< absolute tolerance on the bracket width
  int max_iterations = 200;
  Strategy strategy = Strategy::Hybrid;

  void validate() const;  // throws std::invalid_argument
};

struct Solution {
  double beta_max = 0.0;
  Point x_max;
  double residual = 0.0;  ///< |j(beta_max)|
  int iterations = 0;     ///< parametric subproblem evaluations spent
  std::vector<std::pair<double, double>> trace;  ///< (beta, j) probes, ends at beta_max
};

/// A ratio-maximization problem max W0(x)/W(x): evaluators for the two
/// functionals plus an exact solver for the parametric subproblem
/// max_x J_beta(x) over the feasible set. Implementations are immutable
/// after construction and safe to share across threads.
class RatioProblem {
public:
  virtual ~RatioProblem() = default;

  virtual double eval_w0(const Point& x) const = 0;
  virtual double eval_w(const Point& x) const = 0;

  /// Exact maximizer of J_beta over the domain for the given mode.
  virtual Point argmax_parametric(double beta, ReductionMode mode) const = 0;

  /// A feasible point used to seed bracket discovery: the interval midpoint
  /// for interval domains, the center for the ball.
  virtual Point seed_point() const = 0;
};

/// J_beta(x) under the given mode.
double parametric_value(const RatioProblem& problem, const Point& x, double beta,
                        ReductionMode mode);

/// W0(x)/W(x). Throws DivisionDomainError when W(x) == 0.
double ratio_value(const RatioProblem& problem, const Point& x);

/// Solves the parametric subproblem at beta and returns (x_beta, j(beta)).
/// Throws ModeViolationError if the mode's requirement on W fails at the
/// returned maximizer.
std::pair<Point, double> evaluate_j(const RatioProblem& problem, double beta,
                                    ReductionMode mode);

/// One fixed-point update beta -> W0(x_beta)/W(x_beta) with x_beta the
/// difference-mode maximizer. Monotone nondecreasing below the optimum.
double dinkelbach_step(const RatioProblem& problem, double beta);

/// Full solve: seed a bracket from the ratio at the problem's seed point,
/// expand until the sign pattern of j pins the root down, then drive it to
/// tolerance with the chosen strategy.
Solution solve_ratio_max(const RatioProblem& problem, ReductionMode mode,
                         const SolverOptions& opts = {});

}  // namespace fracmax
