#ifndef WPCN_CONFIG_HPP
#define WPCN_CONFIG_HPP

// Line-oriented key=value configuration shared by the CLI subcommands.
// Keys are the snake_case field names of SystemParams, Geometry, ChannelSet,
// SolverConfig and the sweep block; '#' starts a comment. Unknown keys are
// rejected with the offending name echoed.

#include <optional>
#include <string>
#include <vector>

#include "wpcn/sweep.hpp"

namespace wpcn {

struct RunConfig {
  SystemParams params;
  Geometry geometry;
  // Explicit gains override the geometry-derived value for that link only.
  std::optional<double> h_ex, h_ey, h_xy, h_yx, h_xd, h_yd;
  SolverConfig solver;

  // Sweep block (only consulted by the sweep subcommand).
  std::optional<SweepKind> sweep_kind;
  double start = 0.0;
  double stop = 0.0;
  int num_points = 25;
  std::vector<Scheme> schemes; // empty -> all seven

  // Geometry-derived gains with explicit overrides applied. A bare h_xy
  // override keeps reciprocity by setting h_yx as well.
  ChannelSet channels() const;

  SweepSpec sweep_spec() const; // requires sweep_kind; throws if missing
};

// Both throw std::runtime_error naming the offending key/line on any
// parse error or unknown key.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

// Applies one key=value assignment (also used for CLI --set overrides).
void apply_key(RunConfig& cfg, const std::string& key, const std::string& value);

} // namespace wpcn

#endif
