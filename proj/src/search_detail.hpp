#ifndef WPCN_SRC_SEARCH_DETAIL_HPP
#define WPCN_SRC_SEARCH_DETAIL_HPP

// Internal helpers shared by the solver and oracle translation units.
// Not installed; keep out of public headers.

#include <cstdint>
#include <stdexcept>

#include "wpcn/solver.hpp"

namespace wpcn {
namespace detail {

inline constexpr double kBlock = SystemParams::block_length;

inline void check_coeffs(const CoefficientSet& c) {
  if (!(c.rho1 >= 0.0 && c.rho2 >= 0.0 && c.rho3 >= 0.0 && c.rho4 >= 0.0)) {
    throw std::domain_error("coefficients must be non-negative");
  }
}

// Search candidate; common = -1 marks the empty sentinel.
struct PointCand {
  TimeAllocation alloc;
  double common = -1.0;
  bool converged = false;
};

// Total order: higher common wins; ties prefer the lexicographically
// smallest allocation. Makes the parallel reduction bit-identical to the
// serial scan regardless of thread scheduling.
inline bool point_better(const PointCand& a, const PointCand& b) {
  if (a.common != b.common) return a.common > b.common;
  if (a.alloc.t1 != b.alloc.t1) return a.alloc.t1 < b.alloc.t1;
  if (a.alloc.t2 != b.alloc.t2) return a.alloc.t2 < b.alloc.t2;
  if (a.alloc.t3 != b.alloc.t3) return a.alloc.t3 < b.alloc.t3;
  if (a.alloc.t4a != b.alloc.t4a) return a.alloc.t4a < b.alloc.t4a;
  return a.alloc.t4b < b.alloc.t4b;
}

// Deterministic argmax of eval(k) over k in [0, n). eval must be a pure
// function of k; per-item work counts accumulate into iter_sum.
template <typename Eval>
PointCand search_best(std::int64_t n, ExecMode exec, std::int64_t& iter_sum,
                      Eval&& eval) {
  PointCand best;
  std::int64_t total = 0;
  if (exec == ExecMode::Parallel) {
#pragma omp parallel
    {
      PointCand local;
      std::int64_t mine = 0;
#pragma omp for schedule(static) nowait
      for (std::int64_t k = 0; k < n; ++k) {
        PointCand cand = eval(k, mine);
        if (point_better(cand, local)) local = cand;
      }
#pragma omp critical
      {
        total += mine;
        if (point_better(local, best)) best = local;
      }
    }
  } else {
    for (std::int64_t k = 0; k < n; ++k) {
      PointCand cand = eval(k, total);
      if (point_better(cand, best)) best = cand;
    }
  }
  iter_sum += total;
  return best;
}

inline SolveResult make_result(const Scheme& scheme, const CoefficientSet& c,
                               const PointCand& best, std::int64_t iters) {
  SolveResult r;
  r.scheme = scheme;
  r.allocation = best.alloc;
  r.rates = scheme_rates(best.alloc, c, scheme);
  r.common = r.rates.common();
  r.converged = best.converged;
  r.iterations = iters;
  return r;
}

} // namespace detail
} // namespace wpcn

#endif
