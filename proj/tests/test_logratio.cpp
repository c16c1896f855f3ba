#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "fracmax/core.hpp"
#include "fracmax/errors.hpp"
#include "fracmax/oracle.hpp"
#include "fracmax/problems/logratio.hpp"
#include "support/generators.hpp"

using namespace fracmax;

TEST_CASE("construction samples the grid for positivity violations") {
  auto good0 = [](double x) { return 1.0 + x * x; };
  auto good = [](double x) { return 2.0 + x; };
  CHECK_NOTHROW(LogRatioProblem(good0, good, 0.0, 1.0));

  // f crosses 1 inside the interval
  auto low = [](double x) { return 1.0 + x; };
  CHECK_THROWS_AS(LogRatioProblem(good0, low, -0.5, 1.0), std::invalid_argument);

  // f0 crosses 0 inside the interval
  auto neg = [](double x) { return x - 0.5; };
  CHECK_THROWS_AS(LogRatioProblem(neg, good, 0.0, 1.0), std::invalid_argument);

  CHECK_THROWS_AS(LogRatioProblem(good0, good, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(LogRatioProblem(good0, good, 0.0, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(LogRatioProblem(good0, good, 0.0, 1.0, 1025, 0.0), std::invalid_argument);
}

TEST_CASE("identity evaluators give ratio one on both routes") {
  auto f = [](double x) { return 2.0 + x * x; };
  const LogRatioProblem p(f, f, 0.0, 1.0, 1025);
  const Solution direct = p.solve_direct();
  CHECK(std::abs(direct.beta_max - 1.0) <= 1e-12);
  const Solution nested = p.solve_nested();
  CHECK(std::abs(nested.beta_max - 1.0) <= 1e-12);
}

TEST_CASE("proportional exponents give a constant log ratio") {
  auto f0 = [](double x) { return std::exp(2.0 * x); };
  auto f = [](double x) { return std::exp(x); };
  const LogRatioProblem p(f0, f, 1.0, 2.0, 1025);
  const Solution sol = p.solve_direct();
  CHECK(std::abs(sol.beta_max - 2.0) <= 1e-9);
}

TEST_CASE("direct solve matches a dense grid oracle") {
  auto f0 = [](double x) { return 1.0 + x * x; };
  auto f = [](double x) { return 2.0 + x; };
  const LogRatioProblem p(f0, f, 0.0, 1.0);
  const Solution sol = p.solve_direct();

  const auto oracle = grid_max_interval([&](double x) { return std::log(f0(x)); },
                                        [&](double x) { return std::log(f(x)); }, 0.0, 1.0,
                                        10'000'001);
  CHECK(std::abs(sol.beta_max - oracle.j_star) <= 1e-6);
  // the analytic winner is the right endpoint: ln 2 / ln 3
  CHECK(sol.beta_max == doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(1e-10));
  CHECK(sol.x_max[0] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("nested and direct routes agree") {
  auto f0 = [](double x) { return 1.0 + x * x; };
  auto f = [](double x) { return 2.0 + x; };
  const LogRatioProblem p(f0, f, 0.0, 1.0);
  const Solution direct = p.solve_direct();
  const Solution nested = p.solve_nested();
  CHECK(std::abs(direct.beta_max - nested.beta_max) <= 1e-6);

  testgen::Rng rng(401);
  for (int trial = 0; trial < 10; ++trial) {
    const auto pr = testgen::make_logratio(testgen::random_logratio_coeffs(rng));
    const Solution d = pr.solve_direct();
    const Solution n = pr.solve_nested();
    CHECK(std::abs(d.beta_max - n.beta_max) <= 1e-6);
  }
}

TEST_CASE("gamma at beta = 0 is the plain maximum of f0") {
  auto f0 = [](double x) { return 1.0 + x * x; };
  auto f = [](double x) { return 2.0 + x; };
  const LogRatioProblem p(f0, f, 0.0, 1.0);
  const auto [x, gamma] = p.gamma_of_beta(0.0);
  CHECK(gamma == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(x == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("argmax dominates an off-grid scan within the refinement tolerance") {
  testgen::Rng rng(402);
  int violations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = testgen::random_logratio_coeffs(rng);
    const auto p = testgen::make_logratio(c);
    const double beta = testgen::uniform(rng, -5.0, 5.0);
    const Point xs = p.argmax_parametric(beta, ReductionMode::Difference);
    const double best = parametric_value(p, xs, beta, ReductionMode::Difference);
    const double slack = 1e-9 * (1.0 + std::abs(best));
    // deliberately incommensurate with the problem's own 1025-node grid
    for (int i = 0; i <= 1999; ++i) {
      const double x = c.x1 + (c.x2 - c.x1) * i / 1999.0;
      if (parametric_value(p, {x}, beta, ReductionMode::Difference) > best + slack)
        ++violations;
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("outer-level failures are tagged") {
  auto f0 = [](double x) { return 1.0 + x * x; };
  auto f = [](double x) { return 2.0 + x; };
  const LogRatioProblem p(f0, f, 0.0, 1.0, 257);
  SolverOptions opts;
  opts.max_iterations = 1;
  opts.tolerance_j = 1e-300;
  opts.tolerance_beta = 1e-300;
  try {
    p.solve_nested(opts);
    CHECK(false);
  } catch (const NonConvergenceError& e) {
    CHECK(std::string(e.what()).find("outer level") != std::string::npos);
  }
}
