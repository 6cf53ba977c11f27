#include "wpcn/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "search_detail.hpp"

namespace wpcn {

namespace {

using detail::kBlock;
using detail::PointCand;
using detail::point_better;
using detail::search_best;

// Lattice remainders can undershoot zero by roundoff; snap those, reject
// genuinely negative durations.
bool snap_remainder(double& v) {
  if (v < -1e-12) return false;
  if (v < 0.0) v = 0.0;
  return true;
}

std::int64_t lattice_count(double span, double h) {
  return span <= 0.0 ? 0 : static_cast<std::int64_t>(std::floor(span / h + 1e-9));
}

// Per-t1 hoisted tables, indexed by the lattice position m of the opposite
// exchange slot: den[m] = R - m*h is t2 + t4 for t3 = m*h (and symmetrically
// t3 + t4 for t2 = m*h), where R = budget - t1.
struct CoopTables {
  std::vector<double> lx;  // log2(1 + rho1*t1 / den)
  std::vector<double> ly;  // log2(1 + rho2*t1 / den)
  std::vector<double> sx;  // rho3*t1 / den
  std::vector<double> sy;  // rho4*t1 / den
  std::vector<double> qx;  // sqrt(sx)
  std::vector<double> qy;  // sqrt(sy)
  std::vector<double> jx;  // log2(1 + sx)
  std::vector<double> jy;  // log2(1 + sy)
};

void fill_coop_tables(CoopTables& t, const CoefficientSet& c, double t1, double r,
                      double h, std::int64_t m_max, bool dtb, bool jd) {
  const std::size_t n = static_cast<std::size_t>(m_max) + 1;
  t.lx.resize(n);
  t.ly.resize(n);
  t.sx.resize(n);
  t.sy.resize(n);
  if (dtb) {
    t.qx.resize(n);
    t.qy.resize(n);
  }
  if (jd) {
    t.jx.resize(n);
    t.jy.resize(n);
  }
  const double e1 = c.rho1 * t1;
  const double e2 = c.rho2 * t1;
  const double e3 = c.rho3 * t1;
  const double e4 = c.rho4 * t1;
  for (std::int64_t m = 0; m <= m_max; ++m) {
    const double den = r - static_cast<double>(m) * h;
    const std::size_t u = static_cast<std::size_t>(m);
    t.lx[u] = std::log2(1.0 + snr_ratio(e1, den));
    t.ly[u] = std::log2(1.0 + snr_ratio(e2, den));
    t.sx[u] = snr_ratio(e3, den);
    t.sy[u] = snr_ratio(e4, den);
    if (dtb) {
      t.qx[u] = std::sqrt(t.sx[u]);
      t.qy[u] = std::sqrt(t.sy[u]);
    }
    if (jd) {
      t.jx[u] = std::log2(1.0 + t.sx[u]);
      t.jy[u] = std::log2(1.0 + t.sy[u]);
    }
  }
}

// STBC-NJD / DTB-NJD / STBC-JD: lattice over (t1, t2, t3), t4 = remainder,
// t4a = t4b = t4/2. STBC-JD shares the grid; only the objective changes.
PointCand coop3_grid(SchemeKind kind, const CoefficientSet& c, double budget,
                     double h, ExecMode exec, std::int64_t& iters) {
  const std::int64_t n1 = lattice_count(budget, h);
  const bool dtb = kind == SchemeKind::DtbNjd;
  const bool jd = kind == SchemeKind::StbcJd;
  return search_best(n1 + 1, exec, iters, [&](std::int64_t i, std::int64_t& its) {
    PointCand local;
    const double t1 = static_cast<double>(i) * h;
    double r = budget - t1;
    if (!snap_remainder(r)) return local;
    const std::int64_t m_max = lattice_count(r, h);
    its += (m_max + 1) * (m_max + 2) / 2;
    CoopTables tb;
    fill_coop_tables(tb, c, t1, r, h, m_max, dtb, jd);
    for (std::int64_t j = 0; j <= m_max; ++j) {
      const double t2 = static_cast<double>(j) * h;
      for (std::int64_t k = 0; k + j <= m_max; ++k) {
        const double t3 = static_cast<double>(k) * h;
        double t4 = r - t2 - t3;
        if (!snap_remainder(t4)) continue;
        const double rx2 = t2 * tb.lx[k];
        const double ry3 = t3 * tb.ly[j];
        const double cap = rx2 < ry3 ? rx2 : ry3;
        if (cap <= local.common) continue;
        double common;
        if (jd) {
          const double joint = log_rate(0.5 * t4, tb.sx[k] + tb.sy[j]);
          const double rx4 = joint + t2 * tb.jx[k];
          const double ry4 = joint + t3 * tb.jy[j];
          const double m4 = rx4 < ry4 ? rx4 : ry4;
          common = cap < m4 ? cap : m4;
        } else {
          const double snr = dtb ? dtb_snr(tb.sx[k], tb.sy[j]) : tb.sx[k] + tb.sy[j];
          const double rx4 = log_rate(0.5 * t4, snr);
          common = cap < rx4 ? cap : rx4;
        }
        if (common > local.common) {
          local.alloc = TimeAllocation{t1, t2, t3, 0.5 * t4, 0.5 * t4};
          local.common = common;
        }
      }
    }
    local.converged = true;
    return local;
  });
}

// DTB-JD: lattice over (t1, t2, t3, t4a), t4b = remainder of t4.
PointCand dtb_jd_grid(const CoefficientSet& c, double budget, double h,
                      ExecMode exec, std::int64_t& iters) {
  const std::int64_t n1 = lattice_count(budget, h);
  return search_best(n1 + 1, exec, iters, [&](std::int64_t i, std::int64_t& its) {
    PointCand local;
    const double t1 = static_cast<double>(i) * h;
    double r = budget - t1;
    if (!snap_remainder(r)) return local;
    const std::int64_t m_max = lattice_count(r, h);
    CoopTables tb;
    fill_coop_tables(tb, c, t1, r, h, m_max, true, true);
    for (std::int64_t j = 0; j <= m_max; ++j) {
      const double t2 = static_cast<double>(j) * h;
      for (std::int64_t k = 0; k + j <= m_max; ++k) {
        const double t3 = static_cast<double>(k) * h;
        double t4 = r - t2 - t3;
        if (!snap_remainder(t4)) continue;
        const std::int64_t a_max = lattice_count(t4, h);
        its += a_max + 1;
        const double rx2 = t2 * tb.lx[k];
        const double ry3 = t3 * tb.ly[j];
        const double cap = rx2 < ry3 ? rx2 : ry3;
        if (cap <= local.common) continue;
        const double jdx = t2 * tb.jx[k];
        const double jdy = t3 * tb.jy[j];
        const double q = tb.qx[k] + tb.qy[j];
        const double slot_log = q > 0.0 ? std::log2(1.0 + q * q) : 0.0;
        // min(rx4, ry4) <= t4*L + min(jdx, jdy) at every split.
        if (t4 * slot_log + std::min(jdx, jdy) <= local.common) continue;
        // Concave in t4a; scan the lattice anyway (cheap linear terms) so
        // ties resolve to the smallest t4a by first-hit.
        double cell_best = -1.0;
        double cell_t4a = 0.0;
        for (std::int64_t a = 0; a <= a_max; ++a) {
          const double t4a = static_cast<double>(a) * h;
          const double rx4 = t4a * slot_log + jdx;
          const double ry4 = (t4 - t4a) * slot_log + jdy;
          const double m4 = rx4 < ry4 ? rx4 : ry4;
          if (m4 > cell_best) {
            cell_best = m4;
            cell_t4a = t4a;
          }
        }
        const double common = cap < cell_best ? cap : cell_best;
        if (common > local.common) {
          local.alloc = TimeAllocation{t1, t2, t3, cell_t4a, t4 - cell_t4a};
          local.common = common;
        }
      }
    }
    local.converged = true;
    return local;
  });
}

// Relay: lattice over (t1, t2, t4a), t4b = remainder of the second slot.
PointCand relay_grid(const CoefficientSet& c, RelayDirection direction,
                     bool joint_decoding, double budget, double h, ExecMode exec,
                     std::int64_t& iters) {
  const double hop_c = direction == RelayDirection::YviaX ? c.rho2 : c.rho1;
  const double fwd_c = direction == RelayDirection::YviaX ? c.rho3 : c.rho4;
  const double jd_c = direction == RelayDirection::YviaX ? c.rho4 : c.rho3;
  const std::int64_t n1 = lattice_count(budget, h);
  return search_best(n1 + 1, exec, iters, [&](std::int64_t i, std::int64_t& its) {
    PointCand local;
    const double t1 = static_cast<double>(i) * h;
    double r = budget - t1;
    if (!snap_remainder(r)) return local;
    const std::int64_t m_max = lattice_count(r, h);
    for (std::int64_t j = 0; j <= m_max; ++j) {
      const double t2 = static_cast<double>(j) * h;
      double t3 = r - t2;
      if (!snap_remainder(t3)) continue;
      const std::int64_t a_max = lattice_count(t3, h);
      its += a_max + 1;
      const double hop = rate_term(t2, hop_c * t1, t2);
      const double slot_log =
          t3 > 0.0 && fwd_c * t1 > 0.0 ? std::log2(1.0 + fwd_c * t1 / t3) : 0.0;
      if (std::min(hop, t3 * slot_log) <= local.common) continue;
      const double jdx = joint_decoding ? rate_term(t2, jd_c * t1, t2) : 0.0;
      double cell_best = -1.0;
      double cell_s = 0.0;
      for (std::int64_t a = 0; a <= a_max; ++a) {
        const double s = static_cast<double>(a) * h;
        const double relayed = s * slot_log + jdx;
        const double own = (t3 - s) * slot_log;
        const double m = std::min(std::min(hop, relayed), own);
        if (m > cell_best) {
          cell_best = m;
          cell_s = s;
        }
      }
      if (cell_best > local.common) {
        local.alloc = TimeAllocation{t1, t2, 0.0, cell_s, t3 - cell_s};
        local.common = cell_best;
      }
    }
    local.converged = true;
    return local;
  });
}

// Non-cooperation: lattice over (t1, t2), t3 = remainder.
PointCand noncoop_grid(const CoefficientSet& c, double budget, double h,
                       ExecMode exec, std::int64_t& iters) {
  const std::int64_t n1 = lattice_count(budget, h);
  return search_best(n1 + 1, exec, iters, [&](std::int64_t i, std::int64_t& its) {
    PointCand local;
    const double t1 = static_cast<double>(i) * h;
    double r = budget - t1;
    if (!snap_remainder(r)) return local;
    const std::int64_t m_max = lattice_count(r, h);
    its += m_max + 1;
    for (std::int64_t j = 0; j <= m_max; ++j) {
      const double t2 = static_cast<double>(j) * h;
      double t3 = r - t2;
      if (!snap_remainder(t3)) continue;
      const double rx = rate_term(t2, c.rho3 * t1, t2);
      const double ry = rate_term(t3, c.rho4 * t1, t3);
      const double common = rx < ry ? rx : ry;
      if (common > local.common) {
        local.alloc = TimeAllocation{t1, t2, t3, 0.0, 0.0};
        local.common = common;
      }
    }
    local.converged = true;
    return local;
  });
}

} // namespace

SolveResult oracle_grid(const Scheme& scheme, const SystemParams& params,
                        const ChannelSet& channels, const CoefficientSet& coeffs,
                        double grid_step, ExecMode exec) {
  validate(params);
  validate(channels);
  detail::check_coeffs(coeffs);
  if (!(grid_step > 0.0 && grid_step <= 0.1)) {
    throw std::domain_error("grid_step must be in (0, 0.1]");
  }
  const double budget = kBlock - params.t0;
  if (lattice_count(budget, grid_step) < 1) {
    throw std::domain_error("grid_step too coarse: no feasible grid point in the block budget");
  }

  std::int64_t iters = 0;
  PointCand best;
  switch (scheme.kind) {
    case SchemeKind::StbcNjd:
    case SchemeKind::StbcJd:
    case SchemeKind::DtbNjd:
      best = coop3_grid(scheme.kind, coeffs, budget, grid_step, exec, iters);
      break;
    case SchemeKind::DtbJd:
      best = dtb_jd_grid(coeffs, budget, grid_step, exec, iters);
      break;
    case SchemeKind::RelayNjd:
    case SchemeKind::RelayJd:
      best = relay_grid(coeffs, scheme.direction,
                        scheme.kind == SchemeKind::RelayJd, budget, grid_step,
                        exec, iters);
      break;
    case SchemeKind::NonCoop:
      best = noncoop_grid(coeffs, budget, grid_step, exec, iters);
      break;
  }
  best.converged = true;
  return detail::make_result(scheme, coeffs, best, iters);
}

} // namespace wpcn
