#include "wpcn/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>

#include "wpcn/config.hpp"
#include "wpcn/oracle.hpp"
#include "wpcn/sweep.hpp"

namespace wpcn {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNotConverged = 2;

struct CommonOpts {
  std::string config_path;
  std::vector<std::string> sets;
  bool serial = false;
  bool strict = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_strict = true) {
  cmd->add_option("--config", opts.config_path, "key=value config file");
  cmd->add_option("--set", opts.sets,
                  "inline key=value override (repeatable, applied after --config)");
  cmd->add_flag("--serial", opts.serial, "force sequential execution");
  if (with_strict) {
    cmd->add_flag("--strict", opts.strict,
                  "exit with code 2 if any result did not converge");
  }
}

RunConfig load_config(const CommonOpts& opts) {
  RunConfig cfg;
  if (!opts.config_path.empty()) cfg = parse_config_file(opts.config_path);
  for (const std::string& kv : opts.sets) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("--set expects key=value, got: " + kv);
    }
    apply_key(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (opts.serial) cfg.solver.exec = ExecMode::Serial;
  return cfg;
}

SchemeKind parse_scheme_tag(const std::string& tag) {
  const auto kind = kind_from_tag(tag);
  if (!kind) throw std::runtime_error("unknown scheme tag: " + tag);
  return *kind;
}

bool is_relay(SchemeKind kind) {
  return kind == SchemeKind::RelayNjd || kind == SchemeKind::RelayJd;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void print_result(const SolveResult& r) {
  std::string out;
  out += "scheme=";
  out += to_tag(r.scheme.kind);
  out += '\n';
  if (is_relay(r.scheme.kind)) {
    out += "direction=";
    out += r.scheme.direction == RelayDirection::YviaX ? "yviax" : "xviay";
    out += '\n';
  }
  out += "common=" + num(r.common) + '\n';
  out += "t1=" + num(r.allocation.t1) + '\n';
  out += "t2=" + num(r.allocation.t2) + '\n';
  out += "t3=" + num(r.allocation.t3) + '\n';
  out += "t4a=" + num(r.allocation.t4a) + '\n';
  out += "t4b=" + num(r.allocation.t4b) + '\n';
  out += "r_x2=" + num(r.rates.r_x2) + '\n';
  out += "r_y3=" + num(r.rates.r_y3) + '\n';
  out += "r_x4=" + num(r.rates.r_x4) + '\n';
  out += "r_y4=" + num(r.rates.r_y4) + '\n';
  out += "r_x=" + num(r.rates.r_x()) + '\n';
  out += "r_y=" + num(r.rates.r_y()) + '\n';
  out += std::string("converged=") + (r.converged ? "1" : "0") + '\n';
  out += std::string("achievable_only=") + (r.achievable_only ? "1" : "0") + '\n';
  out += "iterations=" + std::to_string(r.iterations) + '\n';
  std::fputs(out.c_str(), stdout);
}

int run_solve(const std::string& tag, const CommonOpts& opts) {
  const RunConfig cfg = load_config(opts);
  const SchemeKind kind = parse_scheme_tag(tag);
  const ChannelSet ch = cfg.channels();
  const SolveResult r =
      is_relay(kind)
          ? solve_relay_best(cfg.params, ch, kind == SchemeKind::RelayJd,
                             cfg.solver)
          : solve_scheme(Scheme{kind}, cfg.params, ch, cfg.solver);
  print_result(r);
  if (opts.strict && !r.converged) return kExitNotConverged;
  return kExitOk;
}

int run_oracle(const std::string& tag, const CommonOpts& opts) {
  const RunConfig cfg = load_config(opts);
  const SchemeKind kind = parse_scheme_tag(tag);
  const ChannelSet ch = cfg.channels();
  const CoefficientSet c = coefficients(cfg.params, ch);
  const double h = cfg.solver.oracle_grid_step;
  SolveResult r = oracle_grid(Scheme{kind}, cfg.params, ch, c, h,
                              cfg.solver.exec);
  if (is_relay(kind)) {
    // Mirror the solve subcommand: report the better relay direction.
    SolveResult other = oracle_grid(Scheme{kind, RelayDirection::XviaY},
                                    cfg.params, ch, c, h, cfg.solver.exec);
    other.iterations += r.iterations;
    if (other.common > r.common) {
      r = other;
    } else {
      r.iterations = other.iterations;
    }
  }
  print_result(r);
  return kExitOk;
}

bool all_converged(const std::vector<SweepRow>& rows) {
  for (const SweepRow& r : rows) {
    if (!r.converged) return false;
  }
  return true;
}

int run_sweep_cmd(const std::string& out_path, const CommonOpts& opts) {
  const RunConfig cfg = load_config(opts);
  const std::vector<SweepRow> rows = run_sweep(cfg.sweep_spec(), cfg.solver);
  if (out_path.empty()) {
    write_csv(rows, std::cout);
  } else {
    write_csv_file(rows, out_path);
  }
  if (opts.strict && !all_converged(rows)) return kExitNotConverged;
  return kExitOk;
}

int run_figures(const std::string& out_dir, int points, const CommonOpts& opts) {
  const RunConfig cfg = load_config(opts);
  if (cfg.h_ex || cfg.h_ey || cfg.h_xy || cfg.h_yx || cfg.h_xd || cfg.h_yd) {
    throw std::runtime_error(
        "figures uses built-in channel recipes; remove explicit h_* keys");
  }
  std::filesystem::create_directories(out_dir);
  bool ok = true;
  for (int fig = 6; fig <= 9; ++fig) {
    SweepSpec spec = figure_spec(fig, points);
    spec.params = cfg.params;
    spec.geometry = cfg.geometry;
    // The inter-user gain tracks the configured geometry and path-loss model.
    spec.base.h_xy = path_loss_gain(spec.geometry.d_xy, spec.geometry);
    spec.base.h_yx = spec.base.h_xy;
    const std::vector<SweepRow> rows = run_sweep(spec, cfg.solver);
    const std::string path =
        (std::filesystem::path(out_dir) / ("fig" + std::to_string(fig) + ".csv"))
            .string();
    write_csv_file(rows, path);
    ok = ok && all_converged(rows);
  }
  if (opts.strict && !ok) return kExitNotConverged;
  return kExitOk;
}

int apply_thread_env() {
  const char* env = std::getenv("WPCN_THREADS");
  if (env == nullptr || *env == '\0') return kExitOk;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || n < 1 || n > 4096) {
    std::fprintf(stderr, "WPCN_THREADS must be a positive integer, got: %s\n", env);
    return kExitConfig;
  }
  omp_set_num_threads(static_cast<int>(n));
  return kExitOk;
}

} // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"max-min throughput solver for two-user wireless-powered cooperation"};
  app.require_subcommand(1);

  std::string solve_tag, oracle_tag;
  std::string sweep_out, figures_out;
  int figure_points = 25;
  CommonOpts solve_opts, oracle_opts, sweep_opts, figures_opts;

  CLI::App* solve = app.add_subcommand("solve", "solve one instance for one scheme");
  solve->add_option("--scheme", solve_tag, "scheme tag (e.g. stbc-njd)")->required();
  add_common(solve, solve_opts);

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force grid cross-check");
  oracle->add_option("--scheme", oracle_tag, "scheme tag (e.g. stbc-njd)")->required();
  add_common(oracle, oracle_opts, /*with_strict=*/false);

  CLI::App* sweep = app.add_subcommand("sweep", "run a sweep from a config file");
  sweep->add_option("--out", sweep_out, "output CSV path (default: stdout)");
  add_common(sweep, sweep_opts);
  sweep->get_option("--config")->required();

  CLI::App* figures =
      app.add_subcommand("figures", "regenerate the four built-in sweeps");
  figures->add_option("--out", figures_out, "output directory")->required();
  figures->add_option("--points", figure_points, "sweep points per figure")
      ->check(CLI::Range(2, 100000));
  add_common(figures, figures_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e); // prints help, returns 0
  } catch (const CLI::ParseError& e) {
    app.exit(e); // prints the offending flag/argument
    return kExitConfig;
  }

  if (const int rc = apply_thread_env(); rc != kExitOk) return rc;

  try {
    if (solve->parsed()) return run_solve(solve_tag, solve_opts);
    if (oracle->parsed()) return run_oracle(oracle_tag, oracle_opts);
    if (sweep->parsed()) return run_sweep_cmd(sweep_out, sweep_opts);
    if (figures->parsed()) return run_figures(figures_out, figure_points, figures_opts);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
  return kExitConfig; // unreachable: require_subcommand(1)
}

} // namespace wpcn
