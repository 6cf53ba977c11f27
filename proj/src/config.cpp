#include "wpcn/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wpcn {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_real(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error("config key '" + key + "': not a number: " + value);
  }
  if (pos != value.size()) {
    throw std::runtime_error("config key '" + key + "': not a number: " + value);
  }
  return v;
}

int parse_int(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(value, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error("config key '" + key + "': not an integer: " + value);
  }
  if (pos != value.size()) {
    throw std::runtime_error("config key '" + key + "': not an integer: " + value);
  }
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw std::runtime_error("config key '" + key + "': not a boolean: " + value);
}

std::vector<Scheme> parse_schemes(const std::string& key, const std::string& value) {
  std::vector<Scheme> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto kind = kind_from_tag(item);
    if (!kind) {
      throw std::runtime_error("config key '" + key + "': unknown scheme tag: " + item);
    }
    out.push_back(Scheme{*kind});
  }
  if (out.empty()) {
    throw std::runtime_error("config key '" + key + "': empty scheme list");
  }
  return out;
}

} // namespace

ChannelSet RunConfig::channels() const {
  ChannelSet ch = channels_from_geometry(geometry);
  if (h_ex) ch.h_ex = *h_ex;
  if (h_ey) ch.h_ey = *h_ey;
  if (h_xy) {
    ch.h_xy = *h_xy;
    ch.h_yx = *h_xy;
  }
  if (h_yx) ch.h_yx = *h_yx;
  if (h_xd) ch.h_xd = *h_xd;
  if (h_yd) ch.h_yd = *h_yd;
  return ch;
}

SweepSpec RunConfig::sweep_spec() const {
  if (!sweep_kind) {
    throw std::runtime_error("config is missing sweep_kind");
  }
  SweepSpec spec;
  spec.kind = *sweep_kind;
  spec.start = start;
  spec.stop = stop;
  spec.num_points = num_points;
  spec.params = params;
  spec.geometry = geometry;
  spec.base = channels();
  spec.schemes = schemes;
  return spec;
}

void apply_key(RunConfig& cfg, const std::string& key, const std::string& value) {
  // SystemParams
  if (key == "en_power") cfg.params.en_power = parse_real(key, value);
  else if (key == "energy_efficiency") cfg.params.energy_efficiency = parse_real(key, value);
  else if (key == "noise_power") cfg.params.noise_power = parse_real(key, value);
  else if (key == "t0") cfg.params.t0 = parse_real(key, value);
  // Geometry
  else if (key == "d_en_x") cfg.geometry.d_en_x = parse_real(key, value);
  else if (key == "d_en_y") cfg.geometry.d_en_y = parse_real(key, value);
  else if (key == "d_xy") cfg.geometry.d_xy = parse_real(key, value);
  else if (key == "d_x_dn") cfg.geometry.d_x_dn = parse_real(key, value);
  else if (key == "d_y_dn") cfg.geometry.d_y_dn = parse_real(key, value);
  else if (key == "carrier_hz") cfg.geometry.carrier_hz = parse_real(key, value);
  else if (key == "path_loss_exp") cfg.geometry.path_loss_exp = parse_real(key, value);
  else if (key == "antenna_gain") cfg.geometry.antenna_gain = parse_real(key, value);
  // Explicit channel gains
  else if (key == "h_ex") cfg.h_ex = parse_real(key, value);
  else if (key == "h_ey") cfg.h_ey = parse_real(key, value);
  else if (key == "h_xy") cfg.h_xy = parse_real(key, value);
  else if (key == "h_yx") cfg.h_yx = parse_real(key, value);
  else if (key == "h_xd") cfg.h_xd = parse_real(key, value);
  else if (key == "h_yd") cfg.h_yd = parse_real(key, value);
  // SolverConfig
  else if (key == "t1_step") cfg.solver.t1_step = parse_real(key, value);
  else if (key == "rate_tolerance") cfg.solver.rate_tolerance = parse_real(key, value);
  else if (key == "max_bisection_iters") cfg.solver.max_bisection_iters = parse_int(key, value);
  else if (key == "oracle_grid_step") cfg.solver.oracle_grid_step = parse_real(key, value);
  else if (key == "golden_refine") cfg.solver.golden_refine = parse_bool(key, value);
  // Sweep block
  else if (key == "sweep_kind") {
    const auto kind = sweep_kind_from_name(value);
    if (!kind) {
      throw std::runtime_error("config key 'sweep_kind': unknown sweep kind: " + value);
    }
    cfg.sweep_kind = *kind;
  }
  else if (key == "start") cfg.start = parse_real(key, value);
  else if (key == "stop") cfg.stop = parse_real(key, value);
  else if (key == "num_points") cfg.num_points = parse_int(key, value);
  else if (key == "schemes") cfg.schemes = parse_schemes(key, value);
  else {
    throw std::runtime_error("unknown config key: " + key);
  }
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": expected key=value, got: " + line);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": empty key");
    }
    apply_key(cfg, key, value);
  }
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

} // namespace wpcn
