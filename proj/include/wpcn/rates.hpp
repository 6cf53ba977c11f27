#ifndef WPCN_RATES_HPP
#define WPCN_RATES_HPP

// Achievable-rate expressions for all cooperation schemes and benchmarks.
//
// Time structure of one block (durations sum to 1):
//   t0  channel estimation (fixed overhead)
//   t1  wireless energy transfer from the EN
//   t2  X transmits (Y and DN listen)
//   t3  Y transmits (X and DN listen)
//   t4  joint transmission to the DN, split t4 = t4a + t4b
// Benchmarks reuse the same container with a scheme-specific layout.

#include <cmath>
#include <optional>
#include <string>

#include "wpcn/channel.hpp"

namespace wpcn {

enum class SchemeKind {
  StbcNjd,
  StbcJd,
  DtbNjd,
  DtbJd,
  RelayNjd,
  RelayJd,
  NonCoop,
};

// Which user routes its data through the other (relay benchmarks only).
enum class RelayDirection {
  YviaX, // X relays Y's data; Y reaches the DN only through X
  XviaY,
};

struct Scheme {
  SchemeKind kind = SchemeKind::StbcNjd;
  RelayDirection direction = RelayDirection::YviaX; // ignored unless Relay*
};

// Slot durations. Cooperative schemes use all five fields with t4 = t4a + t4b.
// Relay layout: t3 == 0; slot 3 lives in (t4a, t4b) = (relayed, own) split.
// Non-cooperation layout: t4a == t4b == 0.
struct TimeAllocation {
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
  double t4a = 0.0;
  double t4b = 0.0;

  double t4() const { return t4a + t4b; }
  double sum() const { return t1 + t2 + t3 + t4a + t4b; }
};

// Feasibility against the block budget 1 - t0 (1e-9 slack for fp roundoff).
bool feasible(const TimeAllocation& alloc, double t0);
void validate(const TimeAllocation& alloc, double t0);

// Per-constituent rates [bits/s/Hz, normalized by block length].
// r_x2 / r_y3 are the information-exchange rates; r_x4 / r_y4 the rates of
// the DN-bound transmissions. Schemes without a given constituent mirror
// the active one so that r_x()/r_y() hold for every scheme.
struct RatePair {
  double r_x2 = 0.0;
  double r_y3 = 0.0;
  double r_x4 = 0.0;
  double r_y4 = 0.0;

  double r_x() const { return r_x2 < r_x4 ? r_x2 : r_x4; }
  double r_y() const { return r_y3 < r_y4 ? r_y3 : r_y4; }
  double common() const {
    const double x = r_x();
    const double y = r_y();
    return x < y ? x : y;
  }
};

// --- inline primitives shared by the public API, solvers and oracles ---
// Numerics note: keeping every rate evaluation funneled through these two
// helpers makes solver-internal values bit-identical to public re-evaluation.

// d * log2(1 + snr); zero-duration slots carry zero bits by convention.
inline double log_rate(double duration, double snr) {
  if (duration <= 0.0) return 0.0;
  return duration * std::log2(1.0 + snr);
}

// num / den with the den -> 0 limit pinned to 0 (no data phase, no rate).
inline double snr_ratio(double num, double den) {
  return den > 0.0 ? num / den : 0.0;
}

inline double rate_term(double duration, double num, double den) {
  return log_rate(duration, snr_ratio(num, den));
}

// Beamforming SNR of the distributed transmit-beamforming phase.
inline double dtb_snr(double sx, double sy) {
  const double s = std::sqrt(sx) + std::sqrt(sy);
  return s * s;
}

// --- public rate API ---

// Exchange-phase rates r_x2, r_y3 (identical for every cooperative scheme).
// pre: alloc is feasible for the caller's t0.
RatePair exchange_rates(const TimeAllocation& alloc, const CoefficientSet& c);

// Fills r_x4/r_y4 on top of the exchange rates for the four cooperative
// schemes. DTB-NJD requires t4a == t4b; throws std::invalid_argument if not.
RatePair cooperative_rates(const TimeAllocation& alloc, const CoefficientSet& c,
                           const Scheme& scheme);

// Relay and non-cooperation rates, using the layouts documented on
// TimeAllocation. Throws std::invalid_argument on layout violations.
RatePair benchmark_rates(const TimeAllocation& alloc, const CoefficientSet& c,
                         const Scheme& scheme);

// Dispatches to cooperative_rates or benchmark_rates.
RatePair scheme_rates(const TimeAllocation& alloc, const CoefficientSet& c,
                      const Scheme& scheme);

double common_throughput(const RatePair& rates);

bool is_cooperative(SchemeKind kind);

// Stable identifiers used in CSV output and on the command line.
const char* to_tag(SchemeKind kind);
std::optional<SchemeKind> kind_from_tag(const std::string& tag);

} // namespace wpcn

#endif
