#ifndef WPCN_TESTS_SUPPORT_HPP
#define WPCN_TESTS_SUPPORT_HPP

// Deterministic random instances with direct coefficient control: with
// eta = Pt = N0 = 1 the gains below make coefficients() reproduce the drawn
// targets (up to roundoff). Tests always consume the realized coefficients,
// never the targets. The generator avoids std::uniform_real_distribution on
// purpose: its output is implementation-defined, and the suites must draw
// identical instances on every toolchain.

#include <cmath>
#include <cstdint>
#include <random>

#include "wpcn/channel.hpp"

namespace wpcn::testing {

struct Instance {
  SystemParams params;
  ChannelSet channels;
  CoefficientSet coeffs; // == coefficients(params, channels)
};

inline ChannelSet channels_for_targets(double r1, double r2, double r3, double r4) {
  ChannelSet ch;
  ch.h_ex = 1.0;
  ch.h_ey = r2 / r1;
  ch.h_xy = r1;
  ch.h_yx = r1;
  ch.h_xd = r3;
  ch.h_yd = r1 * r4 / r2;
  return ch;
}

inline SystemParams unit_params(double t0 = 0.05) {
  SystemParams p;
  p.energy_efficiency = 1.0;
  p.en_power = 1.0;
  p.noise_power = 1.0;
  p.t0 = t0;
  return p;
}

inline Instance make_instance(double r1, double r2, double r3, double r4,
                              double t0 = 0.05) {
  Instance ins;
  ins.params = unit_params(t0);
  ins.channels = channels_for_targets(r1, r2, r3, r4);
  ins.coeffs = coefficients(ins.params, ins.channels);
  return ins;
}

class InstanceGen {
 public:
  explicit InstanceGen(std::uint64_t seed) : rng_(seed) {}

  double uniform01() {
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  }

  // log-uniform over [lo, hi]
  double coefficient(double lo = 1e-2, double hi = 1e3) {
    return std::exp(std::log(lo) + uniform01() * (std::log(hi) - std::log(lo)));
  }

  Instance draw() {
    const double r1 = coefficient();
    const double r2 = coefficient();
    const double r3 = coefficient();
    const double r4 = coefficient();
    static constexpr double kT0[] = {0.0, 0.05, 0.1};
    const double t0 = kT0[rng_() % 3];
    return make_instance(r1, r2, r3, r4, t0);
  }

 private:
  std::mt19937_64 rng_;
};

} // namespace wpcn::testing

#endif
