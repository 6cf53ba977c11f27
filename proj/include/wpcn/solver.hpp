#ifndef WPCN_SOLVER_HPP
#define WPCN_SOLVER_HPP

// Max-min throughput solvers: a line search over the energy-transfer
// duration t1 with nested bisections that equalize the users' rates.
// Every solver is deterministic; the parallel path returns bit-identical
// results to the serial one (total-order argmax merge).

#include <cstdint>

#include "wpcn/channel.hpp"
#include "wpcn/rates.hpp"

namespace wpcn {

enum class ExecMode { Serial, Parallel };

struct SolverConfig {
  double t1_step = 1e-3;          // line-search step over t1
  double rate_tolerance = 1e-7;   // bisection exit on rate residual [bits]
  int max_bisection_iters = 200;
  double oracle_grid_step = 5e-3;
  bool golden_refine = false;     // refine t1 around the coarse best point
  ExecMode exec = ExecMode::Parallel;
};

// Throws std::domain_error naming the offending field.
void validate(const SolverConfig& cfg);

struct SolveResult {
  Scheme scheme;
  TimeAllocation allocation;
  RatePair rates;              // re-evaluated at `allocation` via scheme_rates
  double common = 0.0;
  bool converged = false;
  bool achievable_only = false; // STBC-JD: achievable value, not an optimum
  std::int64_t iterations = 0;  // total bisection steps (grid points for oracle)
};

// Interval width below which a bisection stops even without rate agreement.
inline constexpr double kWidthTol = 1e-12;

// --- equalization helpers (exposed for property tests) ---

// Split budget23 into (t2, t3) so the exchange rates agree: bisection on t2,
// r_x2 increasing / r_y3 decreasing in t2 at fixed (t1, t4).
struct ExchangeSplit {
  double t2 = 0.0;
  double t3 = 0.0;
  double r_x2 = 0.0;
  double r_y3 = 0.0;
  bool converged = false;
  int iters = 0;
};
ExchangeSplit equalize_exchange(const CoefficientSet& c, double t1, double t4,
                                double budget23, double rate_tol,
                                double width_tol, int max_iters);

// Split the relay slot t3 into (s, t3 - s): s forwards the partner's data,
// the rest carries the relay's own. Equalizes f(s) = (t3-s)*slot_log against
// g(s) = min(hop_rate, s*slot_log + jd_rate); boundary optima (no interior
// crossing) are exact and count as converged.
struct RelaySplit {
  double s = 0.0;
  double relayed = 0.0; // s*slot_log + jd_rate
  double own = 0.0;     // (t3 - s)*slot_log
  double common = 0.0;  // min(hop, relayed, own)
  bool converged = false;
  int iters = 0;
};
RelaySplit equalize_relay_split(double hop_rate, double jd_rate, double slot_log,
                                double t3, double rate_tol, double width_tol,
                                int max_iters);

// Split t4 into (t4a, t4b) equalizing the two joint rates of DTB-JD:
// r_x4 = t4a*slot_log + jd_x (increasing), r_y4 = (t4-t4a)*slot_log + jd_y
// (decreasing). Boundary optima count as converged, as above.
struct JointSplit {
  double t4a = 0.0;
  double r_x4 = 0.0;
  double r_y4 = 0.0;
  bool converged = false;
  int iters = 0;
};
JointSplit equalize_joint_split(double slot_log, double jd_x, double jd_y,
                                double t4, double rate_tol, double width_tol,
                                int max_iters);

// --- scheme solvers ---

SolveResult solve_stbc_njd(const CoefficientSet& coeffs, const SystemParams& params,
                           const SolverConfig& cfg);

// Evaluates the joint-decoding rates at the STBC-NJD optimal allocation;
// the result is achievable but not claimed optimal (achievable_only = true).
SolveResult solve_stbc_jd(const CoefficientSet& coeffs, const SystemParams& params,
                          const SolverConfig& cfg);

SolveResult solve_dtb_njd(const CoefficientSet& coeffs, const SystemParams& params,
                          const SolverConfig& cfg);

SolveResult solve_dtb_jd(const CoefficientSet& coeffs, const SystemParams& params,
                         const SolverConfig& cfg);

// 2-D grid over (t1, t2) with the relay-slot split equalized per point.
SolveResult solve_relay(const SystemParams& params, const ChannelSet& channels,
                        RelayDirection direction, bool joint_decoding,
                        const SolverConfig& cfg);

// Runs both relay directions, returns the better (tie: YviaX).
SolveResult solve_relay_best(const SystemParams& params, const ChannelSet& channels,
                             bool joint_decoding, const SolverConfig& cfg);

SolveResult solve_noncoop(const SystemParams& params, const ChannelSet& channels,
                          const SolverConfig& cfg);

// Dispatch on scheme.kind (relay uses scheme.direction as given).
SolveResult solve_scheme(const Scheme& scheme, const SystemParams& params,
                         const ChannelSet& channels, const SolverConfig& cfg);

} // namespace wpcn

#endif
