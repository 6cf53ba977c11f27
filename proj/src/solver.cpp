#include "wpcn/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "search_detail.hpp"

namespace wpcn {

namespace {

using detail::check_coeffs;
using detail::kBlock;
using detail::PointCand;
using detail::point_better;
using detail::search_best;

// Relay splits exit on a residual far below sigma: when the first-hop rate
// binds, Relay-JD and Relay-NJD share the exact same optimum, and both
// reported values must sit within ~1e-9 of it for the ordering suite.
constexpr double kRelaySplitTol = 1e-11;

// Line-search points are t1 = k*step, k = 1..n (t1 = 0 is skipped: no
// harvested energy means zero throughput).
std::int64_t t1_point_count(double budget, double step) {
  if (!(step < budget)) {
    throw std::domain_error("t1_step must be smaller than the block budget 1 - t0");
  }
  return static_cast<std::int64_t>(std::floor(budget / step + 1e-9));
}

using detail::make_result;

// Joint-phase rate of the NJD cooperative schemes (both users at rate 1/2).
double njd_joint(SchemeKind kind, const CoefficientSet& c, double t1, double t2,
                 double t3, double t4) {
  const double sx = snr_ratio(c.rho3 * t1, t2 + t4);
  const double sy = snr_ratio(c.rho4 * t1, t3 + t4);
  const double snr = kind == SchemeKind::DtbNjd ? dtb_snr(sx, sy) : sx + sy;
  return log_rate(0.5 * t4, snr);
}

// One line-search point of the NJD schemes: outer bisection on t4 equalizing
// the joint rate against the inner-equalized exchange rate. The crossing is
// always interior: r_x4 vanishes at t4 = 0 and r_x2 vanishes at t4 = budget.
PointCand njd_point(SchemeKind kind, const CoefficientSet& c, double t1,
                    double budget, const SolverConfig& cfg, std::int64_t& iters) {
  const double sigma = cfg.rate_tolerance;
  double lb = 0.0, ub = budget;
  ExchangeSplit ex;
  double t4 = 0.0, rx4 = 0.0;
  bool outer_conv = false;
  for (int it = 0; it < cfg.max_bisection_iters; ++it) {
    t4 = 0.5 * (lb + ub);
    ex = equalize_exchange(c, t1, t4, budget - t4, sigma, kWidthTol,
                           cfg.max_bisection_iters);
    rx4 = njd_joint(kind, c, t1, ex.t2, ex.t3, t4);
    iters += ex.iters + 1;
    if (std::abs(ex.r_x2 - rx4) < sigma) {
      outer_conv = true;
      break;
    }
    if (rx4 > ex.r_x2) {
      ub = t4;
    } else {
      lb = t4;
    }
    if (ub - lb <= kWidthTol) break;
  }
  PointCand cand;
  cand.alloc = TimeAllocation{t1, ex.t2, ex.t3, 0.5 * t4, 0.5 * t4};
  cand.common = std::min(std::min(ex.r_x2, ex.r_y3), rx4);
  cand.converged = outer_conv && ex.converged;
  return cand;
}

// Balanced two-user direct transmission: bisection on t2 equalizing
// t2*log2(1 + px*t1/t2) against t3*log2(1 + py*t1/t3) over t2 + t3 = total.
PointCand balance_direct(double px, double py, double t1, double total,
                         const SolverConfig& cfg, std::int64_t& iters) {
  const double sigma = cfg.rate_tolerance;
  double lb = 0.0, ub = total;
  double t2 = 0.0, t3 = total, rx = 0.0, ry = 0.0;
  bool conv = false;
  for (int it = 0; it < cfg.max_bisection_iters; ++it) {
    t2 = 0.5 * (lb + ub);
    t3 = total - t2;
    rx = rate_term(t2, px * t1, t2);
    ry = rate_term(t3, py * t1, t3);
    ++iters;
    if (std::abs(rx - ry) < sigma) {
      conv = true;
      break;
    }
    if (rx > ry) {
      ub = t2;
    } else {
      lb = t2;
    }
    if (ub - lb <= kWidthTol) break;
  }
  PointCand cand;
  cand.alloc = TimeAllocation{t1, t2, t3, 0.0, 0.0};
  cand.common = std::min(rx, ry);
  cand.converged = conv;
  return cand;
}

// One exchange-split evaluation on a pinned-split face of DTB-JD (one user's
// joint share held at zero while the other keeps the whole joint slot). The
// capped user's two decode paths share prefactor and denominator, so its
// rate collapses to a direct term at the weaker of its two coefficients; the
// other user is the min of its exchange rate and whole-slot joint rate. The
// split is balanced by bisection on t2; the best point probed is kept as a
// guard against the rare non-monotone tail of the uncapped user's curve.
struct FaceEval {
  double value = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
  bool converged = false;
};

FaceEval dtb_jd_face_at(const CoefficientSet& c, double t1, double budget,
                        double t4, bool x_capped, const SolverConfig& cfg,
                        std::int64_t& iters) {
  const double sigma = cfg.rate_tolerance;
  const double total23 = budget - t4;
  double lb = 0.0, ub = total23;
  double t2 = 0.0, rx = 0.0, ry = 0.0;
  bool conv = false;
  double best_v = -1.0, best_t2 = 0.0;
  for (int it = 0; it < cfg.max_bisection_iters; ++it) {
    t2 = 0.5 * (lb + ub);
    const double t3 = total23 - t2;
    const double den_x = t2 + t4;
    const double den_y = t3 + t4;
    const double sx = snr_ratio(c.rho3 * t1, den_x);
    const double sy = snr_ratio(c.rho4 * t1, den_y);
    const double snr = dtb_snr(sx, sy);
    if (x_capped) {
      rx = rate_term(t2, std::min(c.rho1, c.rho3) * t1, den_x);
      ry = std::min(rate_term(t3, c.rho2 * t1, den_y),
                    log_rate(t4, snr) + rate_term(t3, c.rho4 * t1, den_y));
    } else {
      rx = std::min(rate_term(t2, c.rho1 * t1, den_x),
                    log_rate(t4, snr) + rate_term(t2, c.rho3 * t1, den_x));
      ry = rate_term(t3, std::min(c.rho2, c.rho4) * t1, den_y);
    }
    ++iters;
    const double v = std::min(rx, ry);
    if (v > best_v) {
      best_v = v;
      best_t2 = t2;
    }
    if (std::abs(rx - ry) < sigma) {
      conv = true;
      break;
    }
    if (rx > ry) {
      ub = t2;
    } else {
      lb = t2;
    }
    if (ub - lb <= kWidthTol) break;
  }
  FaceEval fe;
  const double final_v = std::min(rx, ry);
  if (final_v >= best_v) {
    fe.value = final_v;
    fe.t2 = t2;
    fe.converged = conv;
  } else {
    fe.value = best_v;
    fe.t2 = best_t2;
    fe.converged = false;
  }
  fe.t3 = total23 - fe.t2;
  return fe;
}

// Pinned-split face of DTB-JD, maximized over the joint-slot length by
// golden-section search with best-seen tracking: the face value is
// single-peaked in t4 in every observed instance, and the best-seen guard
// keeps the candidate no worse than any probed point regardless. The golden
// stage obeys max_bisection_iters like every other search stage, so a
// starved budget cannot steer a one-probe exchange split onto its crossing
// and then certify the coincidental balance as convergence.
PointCand dtb_jd_pinned_face(const CoefficientSet& c, double t1, double budget,
                             bool x_capped, const SolverConfig& cfg,
                             std::int64_t& iters) {
  constexpr double kInvPhi = 0.6180339887498949;
  const int golden_iters = std::min(40, cfg.max_bisection_iters);
  double a = 0.0, b = budget;
  double best_v = -1.0, best_t4 = 0.0;
  FaceEval best_fe;
  const auto eval = [&](double t4) {
    const FaceEval fe = dtb_jd_face_at(c, t1, budget, t4, x_capped, cfg, iters);
    if (fe.value > best_v) {
      best_v = fe.value;
      best_t4 = t4;
      best_fe = fe;
    }
    return fe.value;
  };
  double c1 = b - kInvPhi * (b - a);
  double c2 = a + kInvPhi * (b - a);
  double f1 = eval(c1);
  double f2 = eval(c2);
  for (int it = 0; it < golden_iters; ++it) {
    if (f1 >= f2) {
      b = c2;
      c2 = c1;
      f2 = f1;
      c1 = b - kInvPhi * (b - a);
      f1 = eval(c1);
    } else {
      a = c1;
      c1 = c2;
      f1 = f2;
      c2 = a + kInvPhi * (b - a);
      f2 = eval(c2);
    }
  }
  PointCand cand;
  cand.alloc = x_capped
                   ? TimeAllocation{t1, best_fe.t2, best_fe.t3, 0.0, best_t4}
                   : TimeAllocation{t1, best_fe.t2, best_fe.t3, best_t4, 0.0};
  cand.common = best_v;
  cand.converged = best_fe.converged;
  return cand;
}

struct DtbJdProbe {
  PointCand cand;
  double r_x2 = 0.0;
  double m4 = 0.0; // min of the two joint rates at the equalized split
};

DtbJdProbe dtb_jd_at_t4(const CoefficientSet& c, double t1, double budget,
                        double t4, const SolverConfig& cfg, std::int64_t& iters) {
  const double sigma = cfg.rate_tolerance;
  const ExchangeSplit ex = equalize_exchange(c, t1, t4, budget - t4, sigma,
                                             kWidthTol, cfg.max_bisection_iters);
  const double den_x = ex.t2 + t4;
  const double den_y = ex.t3 + t4;
  const double sx = snr_ratio(c.rho3 * t1, den_x);
  const double sy = snr_ratio(c.rho4 * t1, den_y);
  const double slot_log = sx + sy > 0.0 ? std::log2(1.0 + dtb_snr(sx, sy)) : 0.0;
  const double jd_x = rate_term(ex.t2, c.rho3 * t1, den_x);
  const double jd_y = rate_term(ex.t3, c.rho4 * t1, den_y);
  const JointSplit js = equalize_joint_split(slot_log, jd_x, jd_y, t4, sigma,
                                             kWidthTol, cfg.max_bisection_iters);
  iters += ex.iters + js.iters + 1;
  DtbJdProbe p;
  p.cand.alloc = TimeAllocation{t1, ex.t2, ex.t3, js.t4a, t4 - js.t4a};
  p.r_x2 = ex.r_x2;
  p.m4 = std::min(js.r_x4, js.r_y4);
  p.cand.common = std::min(std::min(ex.r_x2, ex.r_y3), p.m4);
  p.cand.converged = ex.converged && js.converged;
  return p;
}

// One line-search point of DTB-JD: the interior all-equal bisection nest
// plus the three boundary faces the all-equal structure cannot reach. With
// the overheard add-on terms the max-min optimum may pin t4 = 0 (both users'
// weaker decode paths bind: solved exactly by balance_direct on the weaker
// coefficient of each user, since a user's two paths share prefactor and
// denominator) or pin one user's joint share at zero while the other keeps
// the whole slot (dtb_jd_pinned_face, one per side). Every candidate is an
// exchange-balanced point of its own face; the best of the four wins.
PointCand dtb_jd_point(const CoefficientSet& c, double t1, double budget,
                       const SolverConfig& cfg, std::int64_t& iters) {
  const double sigma = cfg.rate_tolerance;
  double lb = 0.0, ub = budget;
  PointCand bis;
  bool outer_conv = false;
  for (int it = 0; it < cfg.max_bisection_iters; ++it) {
    const double t4 = 0.5 * (lb + ub);
    const DtbJdProbe p = dtb_jd_at_t4(c, t1, budget, t4, cfg, iters);
    bis = p.cand;
    if (std::abs(p.r_x2 - p.m4) < sigma) {
      outer_conv = true;
      break;
    }
    if (p.m4 > p.r_x2) {
      ub = t4;
    } else {
      lb = t4;
    }
    if (ub - lb <= kWidthTol) break;
  }
  bis.converged = bis.converged && outer_conv;

  PointCand best = bis;
  const PointCand zero = balance_direct(std::min(c.rho1, c.rho3),
                                        std::min(c.rho2, c.rho4), t1, budget,
                                        cfg, iters);
  if (point_better(zero, best)) best = zero;
  const PointCand capx = dtb_jd_pinned_face(c, t1, budget, true, cfg, iters);
  if (point_better(capx, best)) best = capx;
  const PointCand capy = dtb_jd_pinned_face(c, t1, budget, false, cfg, iters);
  if (point_better(capy, best)) best = capy;
  return best;
}

// One line-search point of the non-cooperative benchmark.
PointCand noncoop_point(const CoefficientSet& c, double t1, double budget,
                        const SolverConfig& cfg, std::int64_t& iters) {
  return balance_direct(c.rho3, c.rho4, t1, budget, cfg, iters);
}

// Golden-section refinement of t1 around the coarse line-search winner.
// Tracks the best point actually evaluated, so a non-unimodal surface can
// only improve on the coarse result, never lose to it.
template <typename PointFn>
PointCand golden_refine_t1(PointFn&& point_at, const PointCand& coarse,
                           double lo, double hi, std::int64_t& iters) {
  constexpr double kInvPhi = 0.6180339887498949;
  PointCand best = coarse;
  double a = lo, b = hi;
  double c1 = b - kInvPhi * (b - a);
  double d1 = a + kInvPhi * (b - a);
  PointCand fc = point_at(c1, iters);
  PointCand fd = point_at(d1, iters);
  if (point_better(fc, best)) best = fc;
  if (point_better(fd, best)) best = fd;
  for (int it = 0; it < 200 && b - a > 1e-10; ++it) {
    if (fc.common > fd.common) {
      b = d1;
      d1 = c1;
      fd = fc;
      c1 = b - kInvPhi * (b - a);
      fc = point_at(c1, iters);
      if (point_better(fc, best)) best = fc;
    } else {
      a = c1;
      c1 = d1;
      fc = fd;
      d1 = a + kInvPhi * (b - a);
      fd = point_at(d1, iters);
      if (point_better(fd, best)) best = fd;
    }
  }
  return best;
}

// Shared line-search driver for every solver that scans t1.
template <typename PointFn>
SolveResult line_search_solve(const Scheme& scheme, const CoefficientSet& c,
                              const SystemParams& params, const SolverConfig& cfg,
                              PointFn&& point_at) {
  validate(cfg);
  check_coeffs(c);
  validate(params);
  const double budget = kBlock - params.t0;
  const double step = cfg.t1_step;
  const std::int64_t n = t1_point_count(budget, step);

  std::int64_t iters = 0;
  PointCand best = search_best(n, cfg.exec, iters, [&](std::int64_t k, std::int64_t& its) {
    const double t1 = std::min((static_cast<double>(k) + 1.0) * step, budget);
    return point_at(t1, budget - t1, its);
  });

  if (cfg.golden_refine) {
    const double lo = std::max(step, best.alloc.t1 - step);
    const double hi = std::min(budget - kWidthTol, best.alloc.t1 + step);
    if (hi > lo) {
      best = golden_refine_t1(
          [&](double t1, std::int64_t& its) { return point_at(t1, budget - t1, its); },
          best, lo, hi, iters);
    }
  }
  return make_result(scheme, c, best, iters);
}

} // namespace

void validate(const SolverConfig& cfg) {
  if (!(cfg.t1_step > 0.0 && cfg.t1_step < 1.0)) {
    throw std::domain_error("t1_step must be in (0, 1)");
  }
  if (!(cfg.rate_tolerance > 0.0)) {
    throw std::domain_error("rate_tolerance must be positive");
  }
  if (cfg.max_bisection_iters < 1) {
    throw std::domain_error("max_bisection_iters must be at least 1");
  }
  if (!(cfg.oracle_grid_step > 0.0 && cfg.oracle_grid_step <= 0.1)) {
    throw std::domain_error("oracle_grid_step must be in (0, 0.1]");
  }
}

ExchangeSplit equalize_exchange(const CoefficientSet& c, double t1, double t4,
                                double budget23, double rate_tol,
                                double width_tol, int max_iters) {
  ExchangeSplit r;
  if (budget23 <= 0.0) {
    r.converged = true;
    return r;
  }
  double lb = 0.0, ub = budget23;
  for (int it = 0; it < max_iters; ++it) {
    r.t2 = 0.5 * (lb + ub);
    r.t3 = budget23 - r.t2;
    r.r_x2 = rate_term(r.t2, c.rho1 * t1, r.t2 + t4);
    r.r_y3 = rate_term(r.t3, c.rho2 * t1, r.t3 + t4);
    r.iters = it + 1;
    if (std::abs(r.r_x2 - r.r_y3) < rate_tol) {
      r.converged = true;
      break;
    }
    if (r.r_x2 > r.r_y3) {
      ub = r.t2;
    } else {
      lb = r.t2;
    }
    if (ub - lb <= width_tol) break;
  }
  return r;
}

RelaySplit equalize_relay_split(double hop_rate, double jd_rate, double slot_log,
                                double t3, double rate_tol, double width_tol,
                                int max_iters) {
  const double exit_tol = std::min(rate_tol, kRelaySplitTol);
  RelaySplit r;
  // Boundary candidate s = 0: optimal whenever the relayed user is already
  // covered (f(0) <= g(0)); s = t3 zeroes the relay's own rate and never wins.
  r.s = 0.0;
  r.relayed = jd_rate;
  r.own = t3 * slot_log;
  r.common = std::min(std::min(hop_rate, jd_rate), r.own);
  r.converged = true;
  const double f0 = t3 * slot_log;
  const double g0 = std::min(hop_rate, jd_rate);
  if (!(f0 > g0) || t3 <= 0.0 || slot_log <= 0.0) {
    return r;
  }
  // Interior crossing of f(s) = (t3-s)*slot_log (decreasing) against
  // g(s) = min(hop, s*slot_log + jd) (nondecreasing).
  double lb = 0.0, ub = t3;
  double s = 0.0, f = 0.0, g = 0.0;
  bool conv = false;
  for (int it = 0; it < max_iters; ++it) {
    s = 0.5 * (lb + ub);
    f = (t3 - s) * slot_log;
    g = std::min(hop_rate, s * slot_log + jd_rate);
    r.iters = it + 1;
    if (std::abs(f - g) < exit_tol) {
      conv = true;
      break;
    }
    if (f > g) {
      lb = s;
    } else {
      ub = s;
    }
    if (ub - lb <= width_tol) break;
  }
  const double common_bis = std::min(f, g);
  if (common_bis > r.common) {
    r.s = s;
    r.relayed = s * slot_log + jd_rate;
    r.own = f;
    r.common = common_bis;
    r.converged = conv || std::abs(f - g) < rate_tol;
  }
  return r;
}

JointSplit equalize_joint_split(double slot_log, double jd_x, double jd_y,
                                double t4, double rate_tol, double width_tol,
                                int max_iters) {
  JointSplit r;
  // Boundary candidates first; exact optima whenever no interior crossing
  // exists (one user's overheard rate dominates throughout).
  const double rx_at0 = jd_x;
  const double ry_at0 = t4 * slot_log + jd_y;
  const double rx_at1 = t4 * slot_log + jd_x;
  const double ry_at1 = jd_y;
  r.t4a = 0.0;
  r.r_x4 = rx_at0;
  r.r_y4 = ry_at0;
  r.converged = true;
  double best_min = std::min(rx_at0, ry_at0);
  if (std::min(rx_at1, ry_at1) > best_min) {
    best_min = std::min(rx_at1, ry_at1);
    r.t4a = t4;
    r.r_x4 = rx_at1;
    r.r_y4 = ry_at1;
  }
  if (!(rx_at0 < ry_at0 && rx_at1 > ry_at1) || t4 <= 0.0) {
    return r;
  }
  // Interior crossing: r_x4 increasing, r_y4 decreasing in t4a.
  double lb = 0.0, ub = t4;
  double t4a = 0.0, rx = 0.0, ry = 0.0;
  bool conv = false;
  for (int it = 0; it < max_iters; ++it) {
    t4a = 0.5 * (lb + ub);
    rx = t4a * slot_log + jd_x;
    ry = (t4 - t4a) * slot_log + jd_y;
    r.iters = it + 1;
    if (std::abs(rx - ry) < rate_tol) {
      conv = true;
      break;
    }
    if (rx > ry) {
      ub = t4a;
    } else {
      lb = t4a;
    }
    if (ub - lb <= width_tol) break;
  }
  if (std::min(rx, ry) > best_min) {
    r.t4a = t4a;
    r.r_x4 = rx;
    r.r_y4 = ry;
    r.converged = conv;
  }
  return r;
}

SolveResult solve_stbc_njd(const CoefficientSet& coeffs, const SystemParams& params,
                           const SolverConfig& cfg) {
  return line_search_solve(
      Scheme{SchemeKind::StbcNjd}, coeffs, params, cfg,
      [&](double t1, double budget, std::int64_t& its) {
        return njd_point(SchemeKind::StbcNjd, coeffs, t1, budget, cfg, its);
      });
}

SolveResult solve_dtb_njd(const CoefficientSet& coeffs, const SystemParams& params,
                          const SolverConfig& cfg) {
  return line_search_solve(
      Scheme{SchemeKind::DtbNjd}, coeffs, params, cfg,
      [&](double t1, double budget, std::int64_t& its) {
        return njd_point(SchemeKind::DtbNjd, coeffs, t1, budget, cfg, its);
      });
}

SolveResult solve_stbc_jd(const CoefficientSet& coeffs, const SystemParams& params,
                          const SolverConfig& cfg) {
  const SolveResult base = solve_stbc_njd(coeffs, params, cfg);
  PointCand best;
  best.alloc = base.allocation;
  best.common = base.common;
  best.converged = base.converged;
  SolveResult r = make_result(Scheme{SchemeKind::StbcJd}, coeffs, best,
                              base.iterations);
  r.achievable_only = true;
  return r;
}

SolveResult solve_dtb_jd(const CoefficientSet& coeffs, const SystemParams& params,
                         const SolverConfig& cfg) {
  return line_search_solve(
      Scheme{SchemeKind::DtbJd}, coeffs, params, cfg,
      [&](double t1, double budget, std::int64_t& its) {
        return dtb_jd_point(coeffs, t1, budget, cfg, its);
      });
}

SolveResult solve_noncoop(const SystemParams& params, const ChannelSet& channels,
                          const SolverConfig& cfg) {
  const CoefficientSet coeffs = coefficients(params, channels);
  return line_search_solve(
      Scheme{SchemeKind::NonCoop}, coeffs, params, cfg,
      [&](double t1, double budget, std::int64_t& its) {
        return noncoop_point(coeffs, t1, budget, cfg, its);
      });
}

SolveResult solve_relay(const SystemParams& params, const ChannelSet& channels,
                        RelayDirection direction, bool joint_decoding,
                        const SolverConfig& cfg) {
  validate(cfg);
  const CoefficientSet c = coefficients(params, channels);
  const double hop_c = direction == RelayDirection::YviaX ? c.rho2 : c.rho1;
  const double fwd_c = direction == RelayDirection::YviaX ? c.rho3 : c.rho4;
  const double jd_c = direction == RelayDirection::YviaX ? c.rho4 : c.rho3;
  const double budget = kBlock - params.t0;
  const double step = cfg.t1_step;
  if (!(step < budget)) {
    throw std::domain_error("t1_step must be smaller than the block budget 1 - t0");
  }
  const std::int64_t n = static_cast<std::int64_t>(std::floor(budget / step + 1e-9));

  std::int64_t iters = 0;
  // One work item per t1 row; t2 scans serially inside so the cheap
  // upper-bound prune sees a row-local best in both exec modes.
  PointCand best = search_best(n + 1, cfg.exec, iters, [&](std::int64_t k1, std::int64_t& its) {
    const double t1 = std::min(static_cast<double>(k1) * step, budget);
    const std::int64_t n2 =
        static_cast<std::int64_t>(std::floor((budget - t1) / step + 1e-9));
    PointCand row;
    for (std::int64_t k2 = 0; k2 <= n2; ++k2) {
      const double t2 = std::min(static_cast<double>(k2) * step, budget - t1);
      double t3 = budget - t1 - t2;
      if (t3 < 0.0) t3 = 0.0;
      const double hop = rate_term(t2, hop_c * t1, t2);
      const double slot_log =
          t3 > 0.0 && fwd_c * t1 > 0.0 ? std::log2(1.0 + fwd_c * t1 / t3) : 0.0;
      // common <= g <= hop and common <= f <= t3*slot_log at any split.
      if (std::min(hop, t3 * slot_log) <= row.common) continue;
      const double jdx = joint_decoding ? rate_term(t2, jd_c * t1, t2) : 0.0;
      const RelaySplit sp = equalize_relay_split(hop, jdx, slot_log, t3,
                                                 cfg.rate_tolerance, kWidthTol,
                                                 cfg.max_bisection_iters);
      its += sp.iters + 1;
      PointCand cand;
      cand.alloc = TimeAllocation{t1, t2, 0.0, sp.s, t3 - sp.s};
      cand.common = sp.common;
      cand.converged = sp.converged;
      if (point_better(cand, row)) row = cand;
    }
    return row;
  });

  const Scheme scheme{joint_decoding ? SchemeKind::RelayJd : SchemeKind::RelayNjd,
                      direction};
  return make_result(scheme, c, best, iters);
}

SolveResult solve_relay_best(const SystemParams& params, const ChannelSet& channels,
                             bool joint_decoding, const SolverConfig& cfg) {
  const SolveResult yx =
      solve_relay(params, channels, RelayDirection::YviaX, joint_decoding, cfg);
  const SolveResult xy =
      solve_relay(params, channels, RelayDirection::XviaY, joint_decoding, cfg);
  if (xy.common > yx.common) {
    SolveResult r = xy;
    r.iterations = yx.iterations + xy.iterations;
    return r;
  }
  SolveResult r = yx;
  r.iterations = yx.iterations + xy.iterations;
  return r;
}

SolveResult solve_scheme(const Scheme& scheme, const SystemParams& params,
                         const ChannelSet& channels, const SolverConfig& cfg) {
  switch (scheme.kind) {
    case SchemeKind::StbcNjd:
      return solve_stbc_njd(coefficients(params, channels), params, cfg);
    case SchemeKind::StbcJd:
      return solve_stbc_jd(coefficients(params, channels), params, cfg);
    case SchemeKind::DtbNjd:
      return solve_dtb_njd(coefficients(params, channels), params, cfg);
    case SchemeKind::DtbJd:
      return solve_dtb_jd(coefficients(params, channels), params, cfg);
    case SchemeKind::RelayNjd:
      return solve_relay(params, channels, scheme.direction, false, cfg);
    case SchemeKind::RelayJd:
      return solve_relay(params, channels, scheme.direction, true, cfg);
    case SchemeKind::NonCoop:
      return solve_noncoop(params, channels, cfg);
  }
  throw std::invalid_argument("unknown scheme kind");
}

} // namespace wpcn
