#ifndef WPCN_SWEEP_HPP
#define WPCN_SWEEP_HPP

// Parameter-sweep harness: builds one instance per sweep point from a fixed
// base, solves every requested scheme, and emits plot-ready CSV rows.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wpcn/solver.hpp"

namespace wpcn {

// What a sweep varies; everything else is held at the base instance.
enum class SweepKind {
  UserToDnDistance,     // d(user, DN) in m -> h_xd = h_yd via path loss
  DnChannelDisparityDb, // h_xd = h_yd / 10^(dB/10), h_yd fixed
  EnChannelDisparityDb, // h_ey = h_ex / 10^(dB/10), h_ex fixed
  InterUserDistance,    // d(X, Y) in m -> h_xy via path loss
};

const char* to_name(SweepKind kind);
std::optional<SweepKind> sweep_kind_from_name(const std::string& name);

struct SweepSpec {
  SweepKind kind = SweepKind::UserToDnDistance;
  double start = 0.0;
  double stop = 0.0;
  int num_points = 25;
  SystemParams params;
  Geometry geometry;      // source of the path-loss model for distance sweeps
  ChannelSet base;        // gains at the fixed operating point
  std::vector<Scheme> schemes; // empty -> all seven schemes
};

// start < stop, num_points >= 2; throws std::domain_error otherwise.
void validate(const SweepSpec& spec);

struct SweepRow {
  double sweep_value = 0.0;
  std::string scheme;
  double common = 0.0;
  TimeAllocation alloc;
  double r_x = 0.0;
  double r_y = 0.0;
  bool converged = false;
};

// Channel set of one sweep point (exposed for tests): the base gains with
// exactly the swept family replaced.
ChannelSet sweep_channels(const SweepSpec& spec, double value);

// One row per (sweep point, scheme), ordered by (sweep_value, scheme tag);
// duplicate scheme kinds collapse to one. Relay kinds report the better
// direction. A failing point yields a converged = false row; it never
// aborts the sweep.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const SolverConfig& cfg);

// Fixed column order and formatting (10 significant digits, '\n' endings),
// so files are byte-deterministic for a given row list.
void write_csv(const std::vector<SweepRow>& rows, std::ostream& out);
void write_csv_file(const std::vector<SweepRow>& rows, const std::string& path);

// Built-in sweeps of the four reference experiments, keyed 6..9.
SweepSpec figure_spec(int figure, int num_points = 25);

} // namespace wpcn

#endif
