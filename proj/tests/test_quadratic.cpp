#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "fracmax/core.hpp"
#include "fracmax/oracle.hpp"
#include "fracmax/polyroots.hpp"
#include "fracmax/problems/quadratic.hpp"
#include "support/generators.hpp"

using namespace fracmax;

TEST_CASE("construction checks positivity at the vertex, not just the endpoints") {
  CHECK_NOTHROW(QuadraticIntervalProblem(1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 2.0));
  // W = x^2 - 4x + 1 is positive at 0 and 4 but dips to -3 at the vertex
  CHECK_THROWS_AS(QuadraticIntervalProblem(1.0, -4.0, 1.0, 0.0, 1.0, 0.0, 0.0, 4.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(QuadraticIntervalProblem(-1.0, 0.0, 5.0, 0.0, 1.0, 0.0, 0.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(QuadraticIntervalProblem(1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 2.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("degenerate parametric subproblem picks the endpoint by slope sign") {
  // at beta = a0/a the quadratic term cancels and J_beta is affine
  const QuadraticIntervalProblem up(1.0, 0.0, 1.0, 2.0, 1.0, 0.0, -1.0, 1.0);
  CHECK(up.argmax(2.0) == 1.0);  // slope b0 - beta*b = 1 > 0
  const QuadraticIntervalProblem down(1.0, 0.0, 1.0, 2.0, -1.0, 0.0, -1.0, 1.0);
  CHECK(down.argmax(2.0) == -1.0);
}

TEST_CASE("three-candidate rule on the x/(x^2+1) instance") {
  const QuadraticIntervalProblem p(1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 2.0);

  CHECK(p.argmax(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.j_value(0.5) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));

  CHECK(p.argmax(0.0) == 2.0);
  CHECK(p.j_value(0.0) == 2.0);

  // above the optimum the best candidate is interior and j goes negative
  CHECK(p.argmax(1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p.j_value(1.0) == doctest::Approx(-0.75).epsilon(1e-15));
}

TEST_CASE("reduction solve matches the calculus answer for x/(x^2+1)") {
  const QuadraticIntervalProblem p(1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 2.0);
  const Solution sol = solve_ratio_max(p, ReductionMode::Difference);
  CHECK(std::abs(sol.beta_max - 0.5) <= 1e-10);
  CHECK(std::abs(sol.x_max[0] - 1.0) <= 1e-7);
}

TEST_CASE("difference argmax dominates every grid node") {
  testgen::Rng rng(204);
  int violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = testgen::random_quadratic(rng);
    const double beta = testgen::uniform(rng, -20.0, 20.0);
    const double p2 = p.a0() - beta * p.a();
    const double p1 = p.b0() - beta * p.b();
    const double p0 = p.c0() - beta * p.c();
    auto jb = [&](double x) { return (p2 * x + p1) * x + p0; };
    const double best = jb(p.argmax(beta));
    const double slack = 1e-10 * (1.0 + std::abs(best));
    for (int i = 0; i < 10'000; ++i) {
      const double x = p.x1() + (p.x2() - p.x1()) * i / 9999.0;
      if (jb(x) > best + slack) ++violations;
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("j_value matches a dense grid maximization of J_beta") {
  testgen::Rng rng(201);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = testgen::random_quadratic(rng);
    const double beta = testgen::uniform(rng, -20.0, 20.0);
    const double j = p.j_value(beta);

    const double p2 = p.a0() - beta * p.a();
    const double p1 = p.b0() - beta * p.b();
    const double p0 = p.c0() - beta * p.c();
    auto jb = [&](double x) { return (p2 * x + p1) * x + p0; };
    const long long res = 20'001;
    const auto oracle =
        grid_max_interval(jb, [](double) { return 1.0; }, p.x1(), p.x2(), res);

    CHECK(j >= oracle.j_star - 1e-10 * (1.0 + std::abs(j)));
    const double xmax = std::max(std::abs(p.x1()), std::abs(p.x2()));
    const double lip = 2.0 * std::abs(p2) * xmax + std::abs(p1);
    const double spacing = (p.x2() - p.x1()) / static_cast<double>(res - 1);
    CHECK(j - oracle.j_star <= spacing * lip + 1e-9);
  }
}

TEST_CASE("weighted argmax dominates every grid node") {
  testgen::Rng rng(202);
  int violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = testgen::random_quadratic(rng);
    const double beta = testgen::uniform(rng, -20.0, 20.0);
    const Point xs = p.argmax_parametric(beta, ReductionMode::WeightedDifference);
    const double best = parametric_value(p, xs, beta, ReductionMode::WeightedDifference);
    const double slack = 1e-9 * (1.0 + std::abs(best));
    for (int i = 0; i < 10'000; ++i) {
      const double x = p.x1() + (p.x2() - p.x1()) * i / 9999.0;
      if (parametric_value(p, {x}, beta, ReductionMode::WeightedDifference) > best + slack)
        ++violations;
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("cubic and quadratic root helpers") {
  {
    const QuadraticRoots r = solve_quadratic_real(1.0, -3.0, 2.0);
    REQUIRE(r.count == 2);
    CHECK(r.roots[0] == doctest::Approx(1.0));
    CHECK(r.roots[1] == doctest::Approx(2.0));
  }
  {
    // catastrophic-cancellation shape: x^2 - 1e8 x + 1
    const QuadraticRoots r = solve_quadratic_real(1.0, -1e8, 1.0);
    REQUIRE(r.count == 2);
    CHECK(r.roots[0] == doctest::Approx(1e-8).epsilon(1e-12));
    CHECK(r.roots[1] == doctest::Approx(1e8).epsilon(1e-12));
  }
  {
    const QuadraticRoots r = solve_quadratic_real(0.0, 2.0, -4.0);
    REQUIRE(r.count == 1);
    CHECK(r.roots[0] == doctest::Approx(2.0));
  }
  CHECK(solve_quadratic_real(1.0, 0.0, 1.0).count == 0);

  double roots[3];
  {
    // (x-1)(x-2)(x-3)
    const int n = solve_cubic_real(1.0, -6.0, 11.0, -6.0, roots);
    REQUIRE(n == 3);
    CHECK(roots[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(roots[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(roots[2] == doctest::Approx(3.0).epsilon(1e-12));
  }
  {
    const int n = solve_cubic_real(1.0, 0.0, 1.0, -1.0, roots);  // one real root
    REQUIRE(n == 1);
    const double x = roots[0];
    CHECK(std::abs(x * x * x + x - 1.0) <= 1e-12);
  }
  {
    testgen::Rng rng(203);
    for (int trial = 0; trial < 200; ++trial) {
      const double a = testgen::uniform(rng, -5.0, 5.0);
      const double b = testgen::uniform(rng, -5.0, 5.0);
      const double c = testgen::uniform(rng, -5.0, 5.0);
      const double d = testgen::uniform(rng, -5.0, 5.0);
      if (std::abs(a) < 1e-3) continue;
      const int n = solve_cubic_real(a, b, c, d, roots);
      REQUIRE(n >= 1);
      for (int i = 0; i < n; ++i) {
        const double x = roots[i];
        const double val = ((a * x + b) * x + c) * x + d;
        const double scale = std::abs(a * x * x * x) + std::abs(b * x * x) +
                             std::abs(c * x) + std::abs(d) + 1.0;
        CHECK(std::abs(val) <= 1e-10 * scale);
      }
    }
  }
}
