#include "fracmax/curve.hpp"

#include <stdexcept>
#include <string>

#include "fracmax/errors.hpp"
#include "fracmax/format.hpp"

namespace fracmax {

std::vector<CurveSample> sample_curve(const RatioProblem& problem, ReductionMode mode,
                                      double beta_from, double beta_to, int samples) {
  if (samples < 1) throw std::invalid_argument("sample_curve: requires samples >= 1");
  if (samples > 1 && !(beta_from < beta_to))
    throw std::invalid_argument("sample_curve: requires beta_from < beta_to");

  std::vector<CurveSample> rows(static_cast<std::size_t>(samples));
  std::string error;
  bool failed = false;

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i = 0; i < samples; ++i) {
    try {
      const double beta =
          samples == 1
              ? beta_from
              : (i == samples - 1 ? beta_to
                                  : beta_from + (beta_to - beta_from) * i / (samples - 1));
      const Point x = problem.argmax_parametric(beta, mode);
      CurveSample& row = rows[static_cast<std::size_t>(i)];
      row.beta = beta;
      row.j = parametric_value(problem, x, beta, mode);
      row.ratio_at_xbeta = ratio_value(problem, x);
    } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical(fracmax_curve_error)
#endif
      {
        if (!failed) {
          failed = true;
          error = e.what();
        }
      }
    }
  }
  if (failed) throw Error("sample_curve: " + error);
  return rows;
}

std::string curve_csv(const std::vector<CurveSample>& rows) {
  std::string out = "beta,j,ratio_at_xbeta\n";
  for (const CurveSample& row : rows) {
    out += to_full_precision(row.beta);
    out += ',';
    out += to_full_precision(row.j);
    out += ',';
    out += to_full_precision(row.ratio_at_xbeta);
    out += '\n';
  }
  return out;
}

std::string asymptote_csv(const std::vector<AsymptoteSample>& rows) {
  std::string out = "beta,y1,y2,y3,y4\n";
  for (const AsymptoteSample& row : rows) {
    out += to_full_precision(row.beta);
    out += ',';
    out += to_full_precision(row.y1);
    out += ',';
    out += to_full_precision(row.y2);
    out += ',';
    out += to_full_precision(row.y3);
    out += ',';
    out += to_full_precision(row.y4);
    out += '\n';
  }
  return out;
}

}  // namespace fracmax
