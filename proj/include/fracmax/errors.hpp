#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fracmax {

/// Base class for runtime failures of the solver library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// W(x) violated the requirement of the active reduction mode (W > 0 for the
/// plain difference, W != 0 for the weighted difference).
class ModeViolationError : public Error {
public:
  using Error::Error;
};

/// The denominator W(x) vanished while evaluating the ratio W0/W.
class DivisionDomainError : public Error {
public:
  using Error::Error;
};

/// Requested iteration strategy is not defined for the given mode.
class UnsupportedStrategyError : public Error {
public:
  using Error::Error;
};

/// Sign-change search exhausted its expansion budget.
class NoBracketError : public Error {
public:
  NoBracketError(const std::string& what, double last_lo, double last_hi)
      : Error(what), last_lo(last_lo), last_hi(last_hi) {}

  double last_lo;
  double last_hi;
};

/// Iteration budget exhausted before the tolerances were met. Carries the
/// best iterate seen and, when thrown from the top-level solve, the full
/// evaluation trace.
class NonConvergenceError : public Error {
public:
  NonConvergenceError(const std::string& what, double best_beta, double best_j,
                      std::vector<std::pair<double, double>> trace = {})
      : Error(what), best_beta(best_beta), best_j(best_j), trace(std::move(trace)) {}

  double best_beta;
  double best_j;
  std::vector<std::pair<double, double>> trace;
};

/// The closed-form a-priori estimate degenerates for this instance.
class EstimateUndefinedError : public Error {
public:
  using Error::Error;
};

/// A state that valid inputs cannot reach was reached anyway.
class InternalInconsistencyError : public Error {
public:
  using Error::Error;
};

/// A brute-force grid hit a point where the ratio is undefined.
class OracleDomainError : public Error {
public:
  using Error::Error;
};

/// Expression text failed to parse; position is a 0-based character offset.
class ExprParseError : public Error {
public:
  ExprParseError(const std::string& what, std::size_t position)
      : Error(what), position(position) {}

  std::size_t position;
};

/// Config text failed to parse or validate; line is 1-based.
class ConfigParseError : public Error {
public:
  ConfigParseError(const std::string& what, int line) : Error(what), line(line) {}

  int line;
};

}  // namespace fracmax
