#include "wpcn/rates.hpp"

#include <stdexcept>

namespace wpcn {

namespace {

constexpr double kSplitTol = 1e-12;

[[noreturn]] void layout_error(const char* what) {
  throw std::invalid_argument(what);
}

// Relay link coefficients for one direction. "hop" is the user-to-relay
// exchange, "fwd" the relay-to-DN link shared by both messages, "jd" the
// DN's direct observation of the source user (joint decoding only).
struct RelayCoeffs {
  double hop;
  double fwd;
  double jd;
};

RelayCoeffs relay_coeffs(const CoefficientSet& c, RelayDirection dir) {
  if (dir == RelayDirection::YviaX) {
    return RelayCoeffs{c.rho2, c.rho3, c.rho4};
  }
  return RelayCoeffs{c.rho1, c.rho4, c.rho3};
}

} // namespace

bool feasible(const TimeAllocation& alloc, double t0) {
  if (alloc.t1 < 0.0 || alloc.t2 < 0.0 || alloc.t3 < 0.0 || alloc.t4a < 0.0 ||
      alloc.t4b < 0.0) {
    return false;
  }
  const double budget = SystemParams::block_length - t0;
  return std::abs(alloc.sum() - budget) <= 1e-9;
}

void validate(const TimeAllocation& alloc, double t0) {
  if (!feasible(alloc, t0)) {
    throw std::invalid_argument("time allocation violates the block budget");
  }
}

RatePair exchange_rates(const TimeAllocation& alloc, const CoefficientSet& c) {
  const double t4 = alloc.t4();
  RatePair r;
  r.r_x2 = rate_term(alloc.t2, c.rho1 * alloc.t1, alloc.t2 + t4);
  r.r_y3 = rate_term(alloc.t3, c.rho2 * alloc.t1, alloc.t3 + t4);
  return r;
}

RatePair cooperative_rates(const TimeAllocation& alloc, const CoefficientSet& c,
                           const Scheme& scheme) {
  if (!is_cooperative(scheme.kind)) {
    layout_error("cooperative_rates called with a benchmark scheme");
  }
  const double t4 = alloc.t4();
  const double den_x = alloc.t2 + t4;
  const double den_y = alloc.t3 + t4;
  const double sx = snr_ratio(c.rho3 * alloc.t1, den_x);
  const double sy = snr_ratio(c.rho4 * alloc.t1, den_y);

  RatePair r = exchange_rates(alloc, c);
  switch (scheme.kind) {
    case SchemeKind::StbcNjd: {
      // Alamouti pair: both users send both messages over t4 at rate 1/2.
      const double joint = log_rate(0.5 * t4, sx + sy);
      r.r_x4 = joint;
      r.r_y4 = joint;
      break;
    }
    case SchemeKind::StbcJd: {
      const double joint = log_rate(0.5 * t4, sx + sy);
      r.r_x4 = joint + rate_term(alloc.t2, c.rho3 * alloc.t1, den_x);
      r.r_y4 = joint + rate_term(alloc.t3, c.rho4 * alloc.t1, den_y);
      break;
    }
    case SchemeKind::DtbNjd: {
      if (std::abs(alloc.t4a - alloc.t4b) > kSplitTol) {
        layout_error("DTB-NJD requires t4a == t4b");
      }
      const double snr = dtb_snr(sx, sy);
      r.r_x4 = log_rate(alloc.t4a, snr);
      r.r_y4 = log_rate(alloc.t4b, snr);
      break;
    }
    case SchemeKind::DtbJd: {
      const double snr = dtb_snr(sx, sy);
      r.r_x4 = log_rate(alloc.t4a, snr) + rate_term(alloc.t2, c.rho3 * alloc.t1, den_x);
      r.r_y4 = log_rate(alloc.t4b, snr) + rate_term(alloc.t3, c.rho4 * alloc.t1, den_y);
      break;
    }
    default:
      layout_error("unreachable scheme kind");
  }
  return r;
}

RatePair benchmark_rates(const TimeAllocation& alloc, const CoefficientSet& c,
                         const Scheme& scheme) {
  RatePair r;
  switch (scheme.kind) {
    case SchemeKind::RelayNjd:
    case SchemeKind::RelayJd: {
      if (alloc.t3 != 0.0) {
        layout_error("relay layout stores the slot-3 split in (t4a, t4b); t3 must be 0");
      }
      const RelayCoeffs rc = relay_coeffs(c, scheme.direction);
      const double t3 = alloc.t4a + alloc.t4b; // relay slot, split into fwd/own
      const double hop = rate_term(alloc.t2, rc.hop * alloc.t1, alloc.t2);
      // Both halves of the relay slot share the whole-slot energy spread.
      const double fwd_snr = snr_ratio(rc.fwd * alloc.t1, t3);
      double relayed = log_rate(alloc.t4a, fwd_snr);
      const double own = log_rate(alloc.t4b, fwd_snr);
      if (scheme.kind == SchemeKind::RelayJd) {
        relayed += rate_term(alloc.t2, rc.jd * alloc.t1, alloc.t2);
      }
      if (scheme.direction == RelayDirection::YviaX) {
        r.r_y3 = hop;     // Y -> X exchange
        r.r_y4 = relayed; // X forwards Y's data (+ overheard copy under JD)
        r.r_x2 = own;     // X's own data, mirrored
        r.r_x4 = own;
      } else {
        r.r_x2 = hop;
        r.r_x4 = relayed;
        r.r_y3 = own;
        r.r_y4 = own;
      }
      break;
    }
    case SchemeKind::NonCoop: {
      if (alloc.t4a != 0.0 || alloc.t4b != 0.0) {
        layout_error("non-cooperation uses only t1, t2, t3");
      }
      const double rx = rate_term(alloc.t2, c.rho3 * alloc.t1, alloc.t2);
      const double ry = rate_term(alloc.t3, c.rho4 * alloc.t1, alloc.t3);
      r.r_x2 = rx;
      r.r_x4 = rx;
      r.r_y3 = ry;
      r.r_y4 = ry;
      break;
    }
    default:
      layout_error("benchmark_rates called with a cooperative scheme");
  }
  return r;
}

RatePair scheme_rates(const TimeAllocation& alloc, const CoefficientSet& c,
                      const Scheme& scheme) {
  return is_cooperative(scheme.kind) ? cooperative_rates(alloc, c, scheme)
                                     : benchmark_rates(alloc, c, scheme);
}

double common_throughput(const RatePair& rates) { return rates.common(); }

bool is_cooperative(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::StbcNjd:
    case SchemeKind::StbcJd:
    case SchemeKind::DtbNjd:
    case SchemeKind::DtbJd:
      return true;
    default:
      return false;
  }
}

const char* to_tag(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::StbcNjd: return "stbc-njd";
    case SchemeKind::StbcJd: return "stbc-jd";
    case SchemeKind::DtbNjd: return "dtb-njd";
    case SchemeKind::DtbJd: return "dtb-jd";
    case SchemeKind::RelayNjd: return "relay-njd";
    case SchemeKind::RelayJd: return "relay-jd";
    case SchemeKind::NonCoop: return "non-coop";
  }
  return "?";
}

std::optional<SchemeKind> kind_from_tag(const std::string& tag) {
  for (SchemeKind k : {SchemeKind::StbcNjd, SchemeKind::StbcJd, SchemeKind::DtbNjd,
                       SchemeKind::DtbJd, SchemeKind::RelayNjd, SchemeKind::RelayJd,
                       SchemeKind::NonCoop}) {
    if (tag == to_tag(k)) return k;
  }
  return std::nullopt;
}

} // namespace wpcn
