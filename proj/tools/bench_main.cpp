// Compares the OpenMP line search against the serial reference on one
// representative instance per scheme and asserts bit-identical results.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "wpcn/channel.hpp"
#include "wpcn/oracle.hpp"
#include "wpcn/solver.hpp"

using namespace wpcn;

namespace {

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch())
      .count();
}

bool same_alloc(const TimeAllocation& a, const TimeAllocation& b) {
  return a.t1 == b.t1 && a.t2 == b.t2 && a.t3 == b.t3 && a.t4a == b.t4a &&
         a.t4b == b.t4b;
}

int check(const char* label, const SolveResult& serial, const SolveResult& parallel,
          double ms_serial, double ms_parallel) {
  const bool ok = serial.common == parallel.common &&
                  same_alloc(serial.allocation, parallel.allocation) &&
                  serial.iterations == parallel.iterations;
  std::printf("%-10s serial %9.2f ms  parallel %9.2f ms  speedup %5.2fx  %s\n",
              label, ms_serial, ms_parallel,
              ms_parallel > 0.0 ? ms_serial / ms_parallel : 0.0,
              ok ? "identical" : "MISMATCH");
  return ok ? 0 : 1;
}

} // namespace

int main() {
  SystemParams params;
  Geometry geo;
  const ChannelSet ch = channels_from_geometry(geo);
  const CoefficientSet c = coefficients(params, ch);

  SolverConfig serial_cfg;
  serial_cfg.exec = ExecMode::Serial;
  serial_cfg.t1_step = 2e-4; // finer t1 grid so each solve is measurable
  SolverConfig parallel_cfg = serial_cfg;
  parallel_cfg.exec = ExecMode::Parallel;

  std::printf("threads available: %d\n", omp_get_max_threads());

  int failures = 0;
  const SchemeKind kinds[] = {SchemeKind::StbcNjd, SchemeKind::DtbNjd,
                              SchemeKind::DtbJd,   SchemeKind::RelayJd,
                              SchemeKind::NonCoop};
  for (SchemeKind kind : kinds) {
    const Scheme scheme{kind};
    const double s0 = now_ms();
    const SolveResult rs = solve_scheme(scheme, params, ch, serial_cfg);
    const double s1 = now_ms();
    const SolveResult rp = solve_scheme(scheme, params, ch, parallel_cfg);
    const double s2 = now_ms();
    failures += check(to_tag(kind), rs, rp, s1 - s0, s2 - s1);
  }

  // The oracle is the heavier kernel; compare it at the default grid step.
  {
    const Scheme scheme{SchemeKind::DtbJd};
    const double s0 = now_ms();
    const SolveResult rs = oracle_grid(scheme, params, ch, c, 5e-3, ExecMode::Serial);
    const double s1 = now_ms();
    const SolveResult rp = oracle_grid(scheme, params, ch, c, 5e-3, ExecMode::Parallel);
    const double s2 = now_ms();
    failures += check("oracle", rs, rp, s1 - s0, s2 - s1);
  }

  if (failures != 0) {
    std::fprintf(stderr, "%d kernel(s) diverged between modes\n", failures);
    return EXIT_FAILURE;
  }
  return EXIT_SUCCESS;
}
