// Benchmark of the brute-force grid kernels: OpenMP-parallel versus the
// serial reference, with a bitwise identity check between the two.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "CLI11.hpp"

#include "fracmax/oracle.hpp"
#include "fracmax/problems/ball.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

struct Timing {
  double serial_ms = 0.0;
  double parallel_ms = 0.0;
  bool identical = false;
};

void print_row(const char* name, const std::string& size, const Timing& t) {
  std::printf("%-24s %12s %12.1f ms %12.1f ms %9.2fx   %s\n", name, size.c_str(),
              t.serial_ms, t.parallel_ms, t.serial_ms / t.parallel_ms,
              t.identical ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  long long interval_nodes = 20'000'000;
  long long disk_res = 2000;

  CLI::App app{"grid kernel benchmark: serial reference vs OpenMP"};
  app.add_option("--interval-nodes", interval_nodes, "interval grid size");
  app.add_option("--disk", disk_res, "disk grid nodes per polar axis");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel kernels run serially\n");
#endif
  std::printf("%-24s %12s %15s %15s %10s   %s\n", "kernel", "nodes", "serial", "parallel",
              "speedup", "identical");

  bool ok = true;

  {
    auto w0 = [](double x) { return (x + 0.5) * x + 5.0; };
    auto w = [](double x) { return 0.25 * x * x + x + 3.0; };
    double t0 = now_ms();
    const auto rs = fracmax::grid_max_interval_serial(w0, w, 0.0, 10.0, interval_nodes);
    double t1 = now_ms();
    const auto rp = fracmax::grid_max_interval_parallel(w0, w, 0.0, 10.0, interval_nodes);
    double t2 = now_ms();
    Timing t{t1 - t0, t2 - t1,
             rs.j_star == rp.j_star && rs.x_star == rp.x_star};
    ok = ok && t.identical;
    print_row("interval ratio grid", std::to_string(interval_nodes), t);
  }

  {
    const fracmax::HilbertBallProblem p({1, 1, 1, 1, 1, 0, 0, 0, 0, 10},
                                        {1, 0, 0, 0, 0, 1, 1, 1, 1, 1}, 15.0, 2.7, 1.0);
    double t0 = now_ms();
    const auto rs = fracmax::disk_max_ball_serial(p, disk_res);
    double t1 = now_ms();
    const auto rp = fracmax::disk_max_ball_parallel(p, disk_res);
    double t2 = now_ms();
    Timing t{t1 - t0, t2 - t1,
             rs.j_star == rp.j_star && rs.x_star == rp.x_star};
    ok = ok && t.identical;
    print_row("disk ratio grid", std::to_string(disk_res) + "^2", t);
  }

  if (!ok) {
    std::printf("FAILURE: parallel kernels diverged from the serial reference\n");
    return 1;
  }
  return 0;
}
