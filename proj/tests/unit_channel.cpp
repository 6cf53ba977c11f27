#include <doctest.h>

#include <stdexcept>

#include "wpcn/channel.hpp"

using namespace wpcn;

TEST_CASE("free-space gain reproduces the reference link budget") {
  Geometry geo; // 915 MHz, exponent 2, unit antenna gain
  // Independently derived from G * (c / (4*pi*d*f))^2:
  CHECK(path_loss_gain(5.0, geo) ==
        doctest::Approx(2.7229557549674225e-05).epsilon(1e-12));
  CHECK(path_loss_gain(40.0, geo) ==
        doctest::Approx(4.2546183671365976e-07).epsilon(1e-12));
  CHECK(path_loss_gain(2.0, geo) ==
        doctest::Approx(1.7018473468546387e-04).epsilon(1e-12));
  // Exponent-2 scaling: doubling the distance quarters the gain.
  CHECK(path_loss_gain(10.0, geo) ==
        doctest::Approx(0.25 * path_loss_gain(5.0, geo)).epsilon(1e-12));
  // The quoted operating gains are hit within 1%.
  CHECK(path_loss_gain(5.0, geo) == doctest::Approx(2.72e-5).epsilon(0.01));
  CHECK(path_loss_gain(40.0, geo) == doctest::Approx(4.25e-7).epsilon(0.01));
}

TEST_CASE("geometry-derived channels") {
  Geometry geo;
  const ChannelSet ch = channels_from_geometry(geo);
  CHECK(ch.h_ex == doctest::Approx(path_loss_gain(geo.d_en_x, geo)));
  CHECK(ch.h_ey == doctest::Approx(0.25 * ch.h_ex).epsilon(1e-12));
  CHECK(ch.h_xy == ch.h_yx);
  CHECK(ch.h_xd == doctest::Approx(path_loss_gain(40.0, geo)));
  CHECK(ch.h_yd == ch.h_xd);
}

TEST_CASE("coefficients fold energy, gain and noise") {
  SystemParams params;
  Geometry geo;
  const ChannelSet ch = channels_from_geometry(geo);
  const CoefficientSet c = coefficients(params, ch);
  const double base = params.energy_efficiency * params.en_power / params.noise_power;
  CHECK(c.rho1 == doctest::Approx(base * ch.h_ex * ch.h_xy).epsilon(1e-15));
  CHECK(c.rho2 == doctest::Approx(base * ch.h_ey * ch.h_yx).epsilon(1e-15));
  CHECK(c.rho3 == doctest::Approx(base * ch.h_ex * ch.h_xd).epsilon(1e-15));
  CHECK(c.rho4 == doctest::Approx(base * ch.h_ey * ch.h_yd).epsilon(1e-15));
  // X sits closer to the EN and relays over the stronger inter-user link.
  CHECK(c.rho1 > c.rho2);
  CHECK(c.rho3 > c.rho4);
}

TEST_CASE("harvested energy is linear in the WET duration") {
  SystemParams params;
  Geometry geo;
  const ChannelSet ch = channels_from_geometry(geo);
  const HarvestedEnergy he = harvested_energy(0.5, params, ch);
  CHECK(he.e_x == doctest::Approx(params.energy_efficiency * params.en_power *
                                  ch.h_ex * 0.5)
                      .epsilon(1e-15));
  CHECK(he.e_y == doctest::Approx(params.energy_efficiency * params.en_power *
                                  ch.h_ey * 0.5)
                      .epsilon(1e-15));
  const HarvestedEnergy none = harvested_energy(0.0, params, ch);
  CHECK(none.e_x == 0.0);
  CHECK(none.e_y == 0.0);
  CHECK_THROWS_AS(harvested_energy(1.2, params, ch), std::domain_error);
  CHECK_THROWS_AS(harvested_energy(-0.1, params, ch), std::domain_error);
}

TEST_CASE("validation rejects out-of-domain inputs") {
  SystemParams params;
  params.noise_power = 0.0;
  CHECK_THROWS_AS(validate(params), std::domain_error);
  params = SystemParams{};
  params.t0 = 1.0;
  CHECK_THROWS_AS(validate(params), std::domain_error);
  params = SystemParams{};
  params.t0 = 0.0; // boundary allowed
  CHECK_NOTHROW(validate(params));

  Geometry geo;
  geo.carrier_hz = 0.0;
  CHECK_THROWS_AS(validate(geo), std::domain_error);
  geo = Geometry{};
  geo.d_xy = -1.0;
  CHECK_THROWS_AS(validate(geo), std::domain_error);

  ChannelSet ch = channels_from_geometry(Geometry{});
  ch.h_yx = 2.0 * ch.h_xy;
  CHECK_THROWS_AS(validate(ch), std::domain_error);
  ch = channels_from_geometry(Geometry{});
  ch.h_xd = -1e-9;
  CHECK_THROWS_AS(validate(ch), std::domain_error);
}
