#include "fracmax/rootfind.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fracmax/errors.hpp"

namespace fracmax {

void Bracket::validate() const {
  if (!(beta_lo < beta_hi))
    throw std::invalid_argument("Bracket: beta_lo must be < beta_hi");
  if (!(j_lo > 0.0))
    throw std::invalid_argument(
        "Bracket: j(beta_lo) must be > 0 (j is positive only left of the root; "
        "a reversed bracket indicates a sign error in the problem)");
  if (!(j_hi < 0.0))
    throw std::invalid_argument("Bracket: j(beta_hi) must be < 0");
}

namespace {

double checked(const ScalarFn& j, double beta) {
  const double v = j(beta);
  if (std::isnan(v))
    throw Error("j evaluated to NaN at beta = " + std::to_string(beta));
  return v;
}

}  // namespace

Bracket find_bracket(const ScalarFn& j, double beta_seed, double expansion_factor,
                     int budget) {
  if (!(expansion_factor > 1.0))
    throw std::invalid_argument("find_bracket: expansion_factor must be > 1");
  if (budget < 1) throw std::invalid_argument("find_bracket: budget must be >= 1");

  double width = 2.0;
  double lo = beta_seed - 1.0;
  double hi = beta_seed + 1.0;
  double j_lo = checked(j, lo);
  double j_hi = checked(j, hi);

  // 2 calls spent; every loop turn spends exactly one more, so the total
  // stays within 2*budget + 1.
  const int max_steps = 2 * budget - 1;
  int zero_retries_lo = 0;
  int zero_retries_hi = 0;
  for (int step = 0; ; ++step) {
    if (j_lo > 0.0 && j_hi < 0.0) return {lo, hi, j_lo, j_hi};
    if (step >= max_steps)
      throw NoBracketError("find_bracket: no sign change within the expansion budget; "
                               "last interval [" +
                               std::to_string(lo) + ", " + std::to_string(hi) + "]",
                           lo, hi);

    if (j_lo < 0.0) {
      // root lies left of lo
      width *= expansion_factor;
      hi = lo;
      j_hi = j_lo;
      lo = hi - width;
      j_lo = checked(j, lo);
    } else if (j_lo == 0.0) {
      // probe hit the root exactly; widen the left end to restore strict signs
      const double delta =
          std::max(1.0, std::abs(lo)) * 1e-12 * std::pow(2.0, zero_retries_lo++);
      lo -= delta;
      j_lo = checked(j, lo);
    } else if (j_hi == 0.0) {
      const double delta =
          std::max(1.0, std::abs(hi)) * 1e-12 * std::pow(2.0, zero_retries_hi++);
      hi += delta;
      j_hi = checked(j, hi);
    } else {
      // both positive: root lies right of hi
      width *= expansion_factor;
      lo = hi;
      j_lo = j_hi;
      hi = lo + width;
      j_hi = checked(j, hi);
    }
  }
}

RootReport bisect(const ScalarFn& j, Bracket bracket, const SolverOptions& opts) {
  opts.validate();
  bracket.validate();

  double lo = bracket.beta_lo;
  double hi = bracket.beta_hi;
  double best_beta = std::abs(bracket.j_lo) <= std::abs(bracket.j_hi) ? lo : hi;
  double best_j = std::abs(bracket.j_lo) <= std::abs(bracket.j_hi) ? bracket.j_lo
                                                                   : bracket.j_hi;
  int evals = 0;

  if (hi - lo <= opts.tolerance_beta) return {lo + (hi - lo) / 2, 0, hi - lo};

  for (int it = 0; it < opts.max_iterations; ++it) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi)  // interval collapsed to adjacent doubles
      return {mid, evals, hi - lo};
    const double jm = checked(j, mid);
    ++evals;
    if (std::abs(jm) < std::abs(best_j)) {
      best_beta = mid;
      best_j = jm;
    }
    if (std::abs(jm) <= opts.tolerance_j) return {mid, evals, hi - lo};
    if (jm > 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= opts.tolerance_beta) return {mid, evals, hi - lo};
  }
  throw NonConvergenceError("bisect exceeded max_iterations", best_beta, best_j);
}

RootReport hybrid_solve(const ScalarFn& j, const ScalarFn& propose, Bracket bracket,
                        const SolverOptions& opts) {
  opts.validate();
  bracket.validate();

  double lo = bracket.beta_lo;
  double hi = bracket.beta_hi;
  double cur = lo;  // proposals launch from the positive-j side first
  double best_beta = std::abs(bracket.j_lo) <= std::abs(bracket.j_hi) ? lo : hi;
  double best_j = std::abs(bracket.j_lo) <= std::abs(bracket.j_hi) ? bracket.j_lo
                                                                   : bracket.j_hi;
  int evals = 0;
  bool force_bisect = false;

  if (hi - lo <= opts.tolerance_beta) return {lo + (hi - lo) / 2, 0, hi - lo};

  for (int it = 0; it < opts.max_iterations; ++it) {
    const double width = hi - lo;
    double cand;
    bool proposed = false;
    if (force_bisect) {
      cand = lo + width / 2;
      force_bisect = false;
    } else {
      const double prop = propose(cur);
      if (std::isfinite(prop) && prop > lo && prop < hi) {
        cand = prop;
        proposed = true;
      } else {
        cand = lo + width / 2;
      }
    }
    if (cand <= lo || cand >= hi) return {cur, evals, width};  // float resolution reached

    const double jc = checked(j, cand);
    ++evals;
    if (std::abs(jc) < std::abs(best_j)) {
      best_beta = cand;
      best_j = jc;
    }
    if (std::abs(jc) <= opts.tolerance_j) return {cand, evals, hi - lo};
    if (jc > 0.0)
      lo = cand;
    else
      hi = cand;
    cur = cand;
    if (hi - lo <= opts.tolerance_beta) return {cand, evals, hi - lo};
    // a proposal that failed to halve the bracket counts as a stall
    if (proposed && hi - lo > 0.5 * width) force_bisect = true;
  }
  throw NonConvergenceError("hybrid_solve exceeded max_iterations", best_beta, best_j);
}

}  // namespace fracmax
