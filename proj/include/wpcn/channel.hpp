#ifndef WPCN_CHANNEL_HPP
#define WPCN_CHANNEL_HPP

// Physical-layer model: system parameters, deployment geometry, channel
// power gains and the derived SNR coefficients used by every rate formula.

namespace wpcn {

// Block length is normalized to 1; all slot durations are fractions of it.
struct SystemParams {
  double en_power = 3.0;          // EN transmit power Pt [W]
  double energy_efficiency = 0.5; // harvester efficiency, in (0,1]
  double noise_power = 1e-10;     // receiver noise N0 [W]
  double t0 = 0.05;               // channel-estimation overhead, in [0,1)

  static constexpr double block_length = 1.0;
};

// Node placement and propagation constants. Distances in meters.
struct Geometry {
  double d_en_x = 5.0;
  double d_en_y = 10.0;
  double d_xy = 2.0;
  double d_x_dn = 40.0;
  double d_y_dn = 40.0;
  double carrier_hz = 915e6;
  double path_loss_exp = 2.0;
  double antenna_gain = 1.0;
};

// Average channel power gains. Reciprocity h_xy == h_yx is required.
struct ChannelSet {
  double h_ex = 0.0;
  double h_ey = 0.0;
  double h_xy = 0.0;
  double h_yx = 0.0;
  double h_xd = 0.0;
  double h_yd = 0.0;
};

// rho1..rho4 fold energy transfer, channel gain and noise into one SNR
// scale per link; every rate in the system is of the form
// d * log2(1 + rho * t1 / den).
struct CoefficientSet {
  double rho1 = 0.0; // X -> Y exchange
  double rho2 = 0.0; // Y -> X exchange
  double rho3 = 0.0; // X -> DN
  double rho4 = 0.0; // Y -> DN
};

struct HarvestedEnergy {
  double e_x = 0.0;
  double e_y = 0.0;
};

// Throw std::domain_error naming the offending field if invalid.
void validate(const SystemParams& params);
void validate(const Geometry& geom);
void validate(const ChannelSet& channels);

// Free-space power gain G_A * (c / (4*pi*d*f))^exp at distance d.
double path_loss_gain(double distance, const Geometry& geom);

// All five link gains from geometry (h_xy == h_yx by construction).
ChannelSet channels_from_geometry(const Geometry& geom);

CoefficientSet coefficients(const SystemParams& params, const ChannelSet& channels);

// Energy captured by each user after a WET phase of duration t1.
HarvestedEnergy harvested_energy(double t1, const SystemParams& params,
                                 const ChannelSet& channels);

} // namespace wpcn

#endif
