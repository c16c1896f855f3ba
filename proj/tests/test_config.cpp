#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "fracmax/config.hpp"
#include "fracmax/core.hpp"
#include "fracmax/errors.hpp"

using namespace fracmax;

namespace {

const char* kBallText = R"(# reference data
family = ball
w0 = 1,1,1,1,1,0,0,0,0,10
w = 1,0,0,0,0,1,1,1,1,1
h0 = 15
h = 2.7
r = 1
)";

}  // namespace

TEST_CASE("parses a ball block with comments and whitespace") {
  const ProblemConfig cfg = parse_config(kBallText);
  CHECK(cfg.family == Family::Ball);
  CHECK(cfg.w0.size() == 10);
  CHECK(cfg.w0[9] == 10.0);
  CHECK(cfg.h0 == 15.0);
  CHECK(cfg.h == 2.7);
  CHECK(cfg.r == 1.0);
  CHECK(!cfg.solver.strategy.has_value());
}

TEST_CASE("parses the other families and the solver overrides") {
  const ProblemConfig lin = parse_config(
      "family = linear\na = 1\nb = 1\na0 = 2\nb0 = 0\nx1 = 0\nx2 = 1\n"
      "strategy = bisect\ntolerance_j = 1e-8\nmax_iterations = 99\n");
  CHECK(lin.family == Family::Linear);
  CHECK(lin.solver.strategy == Strategy::Bisection);
  CHECK(lin.solver.tolerance_j == 1e-8);
  CHECK(lin.solver.max_iterations == 99);
  const SolverOptions opts = solver_options_for(lin);
  CHECK(opts.tolerance_j == 1e-8);
  CHECK(opts.max_iterations == 99);
  CHECK(opts.tolerance_beta == 1e-12);  // untouched default

  const ProblemConfig quad = parse_config(
      "family = quadratic\na = 1\nb = 0\nc = 1\na0 = 0\nb0 = 1\nc0 = 0\nx1 = 0\nx2 = 2\n");
  CHECK(quad.family == Family::Quadratic);

  const ProblemConfig lr = parse_config(
      "family = logratio\nf0_expr = 1 + x^2\nf_expr = 2 + x\nx1 = 0\nx2 = 1\n");
  CHECK(lr.family == Family::LogRatio);
  CHECK(lr.grid_resolution == 4097);  // default applies
  CHECK(lr.refine_tolerance == 1e-12);
}

TEST_CASE("parse errors carry 1-based line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_config(text);
    } catch (const ConfigParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("family = nosuch\n") == 1);
  CHECK(line_of("family = linear\na = 1\na = 2\n") == 3);          // duplicate
  CHECK(line_of("family = linear\na = 1\nb = 1\na0 = 2\nb0 = 0\nx1 = 0\nx2 = 1\n"
                "bogus = 2\n") == 8);  // unknown key, reported at its own line
  CHECK(line_of("family = ball\nw0 = 1,oops\nw = 1\nh0 = 0\nh = 2\nr = 1\n") == 2);
  CHECK(line_of("just some text\n") == 1);
  CHECK(line_of("a = 1\n") >= 1);  // missing family
  // family invariant violations surface on load
  CHECK(line_of("family = ball\nw0 = 1,0\nw = 1,0\nh0 = 0\nh = 0.5\nr = 1\n") == 1);
  CHECK(line_of("family = linear\na = -1\nb = 1\na0 = 1\nb0 = 1\nx1 = 0\nx2 = 1\n") == 1);
  CHECK(line_of("family = logratio\nf0_expr = 1 +\nf_expr = 2 + x\nx1 = 0\nx2 = 1\n") == 2);
}

TEST_CASE("missing keys are reported by name") {
  try {
    parse_config("family = ball\nw0 = 1,0\nw = 0,1\nh0 = 0\nh = 2\n");
    CHECK(false);
  } catch (const ConfigParseError& e) {
    CHECK(std::string(e.what()).find("'r'") != std::string::npos);
  }
}

TEST_CASE("dump and reparse reproduce the config exactly") {
  const ProblemConfig ball = parse_config(kBallText);
  CHECK(parse_config(dump_config(ball)) == ball);

  ProblemConfig lin = parse_config(
      "family = linear\na = 0.30000000000000004\nb = 1\na0 = 2\nb0 = 0\nx1 = 0\nx2 = 1\n"
      "strategy = hybrid\ntolerance_beta = 4.9406564584124654e-324\n");
  CHECK(parse_config(dump_config(lin)) == lin);

  const ProblemConfig lr = parse_config(
      "family = logratio\nf0_expr = exp(2*x)\nf_expr = e + x^2\nx1 = -1\nx2 = 1\n"
      "grid_resolution = 513\nrefine_tolerance = 1e-10\n");
  CHECK(parse_config(dump_config(lr)) == lr);

  const ProblemConfig quad = parse_config(
      "family = quadratic\na = 1\nb = 0\nc = 1\na0 = 0\nb0 = 1\nc0 = 0\nx1 = 0\nx2 = 2\n");
  CHECK(parse_config(dump_config(quad)) == quad);
}

TEST_CASE("make_problem produces solvable instances") {
  const ProblemConfig lr = parse_config(
      "family = logratio\nf0_expr = 1 + x^2\nf_expr = 2 + x\nx1 = 0\nx2 = 1\n");
  const auto problem = make_problem(lr);
  const Solution sol = solve_ratio_max(*problem, ReductionMode::Difference);
  CHECK(sol.beta_max == doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(1e-9));

  const ProblemConfig ball = parse_config(kBallText);
  const Solution bsol = solve_ratio_max(*make_problem(ball), ReductionMode::Difference);
  CHECK(std::abs(bsol.beta_max - 43.603021018298435) <= 1e-8);
}

TEST_CASE("load_config_file reports unreadable paths") {
  CHECK_THROWS_AS(load_config_file("/nonexistent/path.cfg"), ConfigParseError);
}
