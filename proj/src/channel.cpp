#include "wpcn/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wpcn {

namespace {

constexpr double kLightSpeed = 3e8;

void check_positive(double v, const char* name) {
  if (!(v > 0.0)) {
    throw std::domain_error(std::string(name) + " must be positive");
  }
}

void check_nonneg(double v, const char* name) {
  if (!(v >= 0.0)) {
    throw std::domain_error(std::string(name) + " must be non-negative");
  }
}

} // namespace

void validate(const SystemParams& params) {
  check_positive(params.en_power, "en_power");
  if (!(params.energy_efficiency > 0.0 && params.energy_efficiency <= 1.0)) {
    throw std::domain_error("energy_efficiency must be in (0, 1]");
  }
  check_positive(params.noise_power, "noise_power");
  if (!(params.t0 >= 0.0 && params.t0 < 1.0)) {
    throw std::domain_error("t0 must be in [0, 1)");
  }
}

void validate(const Geometry& geom) {
  check_positive(geom.d_en_x, "d_en_x");
  check_positive(geom.d_en_y, "d_en_y");
  check_positive(geom.d_xy, "d_xy");
  check_positive(geom.d_x_dn, "d_x_dn");
  check_positive(geom.d_y_dn, "d_y_dn");
  check_positive(geom.carrier_hz, "carrier_hz");
  check_positive(geom.path_loss_exp, "path_loss_exp");
  check_positive(geom.antenna_gain, "antenna_gain");
}

void validate(const ChannelSet& channels) {
  check_nonneg(channels.h_ex, "h_ex");
  check_nonneg(channels.h_ey, "h_ey");
  check_nonneg(channels.h_xy, "h_xy");
  check_nonneg(channels.h_yx, "h_yx");
  check_nonneg(channels.h_xd, "h_xd");
  check_nonneg(channels.h_yd, "h_yd");
  if (channels.h_xy != channels.h_yx) {
    throw std::domain_error("h_xy and h_yx must be equal (reciprocity)");
  }
}

double path_loss_gain(double distance, const Geometry& geom) {
  check_positive(distance, "distance");
  check_positive(geom.carrier_hz, "carrier_hz");
  const double wave = kLightSpeed / (4.0 * M_PI * distance * geom.carrier_hz);
  return geom.antenna_gain * std::pow(wave, geom.path_loss_exp);
}

ChannelSet channels_from_geometry(const Geometry& geom) {
  validate(geom);
  ChannelSet ch;
  ch.h_ex = path_loss_gain(geom.d_en_x, geom);
  ch.h_ey = path_loss_gain(geom.d_en_y, geom);
  ch.h_xy = path_loss_gain(geom.d_xy, geom);
  ch.h_yx = ch.h_xy;
  ch.h_xd = path_loss_gain(geom.d_x_dn, geom);
  ch.h_yd = path_loss_gain(geom.d_y_dn, geom);
  return ch;
}

CoefficientSet coefficients(const SystemParams& params, const ChannelSet& channels) {
  validate(params);
  validate(channels);
  // One shared product order so every caller sees bit-identical values.
  const double base = params.energy_efficiency * params.en_power / params.noise_power;
  CoefficientSet c;
  c.rho1 = base * channels.h_ex * channels.h_xy;
  c.rho2 = base * channels.h_ey * channels.h_yx;
  c.rho3 = base * channels.h_ex * channels.h_xd;
  c.rho4 = base * channels.h_ey * channels.h_yd;
  return c;
}

HarvestedEnergy harvested_energy(double t1, const SystemParams& params,
                                 const ChannelSet& channels) {
  validate(params);
  validate(channels);
  if (!(t1 >= 0.0 && t1 <= SystemParams::block_length - params.t0 + 1e-12)) {
    throw std::domain_error("t1 must lie in [0, 1 - t0]");
  }
  const double scale = params.energy_efficiency * t1 * params.en_power;
  return HarvestedEnergy{scale * channels.h_ex, scale * channels.h_ey};
}

} // namespace wpcn
