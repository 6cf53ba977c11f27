#include "wpcn/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace wpcn {

namespace {

const SchemeKind kAllKinds[] = {
    SchemeKind::StbcNjd, SchemeKind::StbcJd,   SchemeKind::DtbNjd,
    SchemeKind::DtbJd,   SchemeKind::RelayNjd, SchemeKind::RelayJd,
    SchemeKind::NonCoop,
};

double db_ratio(double db) { return std::pow(10.0, db / 10.0); }

SolveResult solve_row(SchemeKind kind, const SystemParams& params,
                      const ChannelSet& ch, const SolverConfig& cfg) {
  if (kind == SchemeKind::RelayNjd || kind == SchemeKind::RelayJd) {
    return solve_relay_best(params, ch, kind == SchemeKind::RelayJd, cfg);
  }
  return solve_scheme(Scheme{kind}, params, ch, cfg);
}

void append_number(std::string& out, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  out += buf;
}

} // namespace

const char* to_name(SweepKind kind) {
  switch (kind) {
    case SweepKind::UserToDnDistance: return "user_to_dn_distance";
    case SweepKind::DnChannelDisparityDb: return "dn_channel_disparity_db";
    case SweepKind::EnChannelDisparityDb: return "en_channel_disparity_db";
    case SweepKind::InterUserDistance: return "inter_user_distance";
  }
  return "unknown";
}

std::optional<SweepKind> sweep_kind_from_name(const std::string& name) {
  if (name == "user_to_dn_distance") return SweepKind::UserToDnDistance;
  if (name == "dn_channel_disparity_db") return SweepKind::DnChannelDisparityDb;
  if (name == "en_channel_disparity_db") return SweepKind::EnChannelDisparityDb;
  if (name == "inter_user_distance") return SweepKind::InterUserDistance;
  return std::nullopt;
}

void validate(const SweepSpec& spec) {
  if (!(spec.start < spec.stop)) {
    throw std::domain_error("sweep start must be smaller than stop");
  }
  if (spec.num_points < 2) {
    throw std::domain_error("num_points must be at least 2");
  }
  validate(spec.params);
  if (spec.kind == SweepKind::UserToDnDistance ||
      spec.kind == SweepKind::InterUserDistance) {
    if (!(spec.start > 0.0)) {
      throw std::domain_error("distance sweeps require start > 0");
    }
  } else if (spec.start < 0.0) {
    throw std::domain_error("disparity sweeps require start >= 0 dB");
  }
}

ChannelSet sweep_channels(const SweepSpec& spec, double value) {
  ChannelSet ch = spec.base;
  switch (spec.kind) {
    case SweepKind::UserToDnDistance:
      ch.h_xd = path_loss_gain(value, spec.geometry);
      ch.h_yd = ch.h_xd;
      break;
    case SweepKind::DnChannelDisparityDb:
      ch.h_xd = ch.h_yd / db_ratio(value);
      break;
    case SweepKind::EnChannelDisparityDb:
      ch.h_ey = ch.h_ex / db_ratio(value);
      break;
    case SweepKind::InterUserDistance:
      ch.h_xy = path_loss_gain(value, spec.geometry);
      ch.h_yx = ch.h_xy;
      break;
  }
  return ch;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const SolverConfig& cfg) {
  validate(spec);
  validate(cfg);

  std::vector<SchemeKind> kinds;
  if (spec.schemes.empty()) {
    kinds.assign(std::begin(kAllKinds), std::end(kAllKinds));
  } else {
    for (const Scheme& s : spec.schemes) kinds.push_back(s.kind);
  }
  std::sort(kinds.begin(), kinds.end(), [](SchemeKind a, SchemeKind b) {
    return std::string(to_tag(a)) < to_tag(b);
  });
  kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(spec.num_points) * kinds.size());
  const double step = (spec.stop - spec.start) / (spec.num_points - 1);
  for (int i = 0; i < spec.num_points; ++i) {
    const double value =
        i + 1 == spec.num_points ? spec.stop : spec.start + i * step;
    const ChannelSet ch = sweep_channels(spec, value);
    for (SchemeKind kind : kinds) {
      SweepRow row;
      row.sweep_value = value;
      row.scheme = to_tag(kind);
      try {
        const SolveResult r = solve_row(kind, spec.params, ch, cfg);
        row.common = r.common;
        row.alloc = r.allocation;
        row.r_x = r.rates.r_x();
        row.r_y = r.rates.r_y();
        row.converged = r.converged;
      } catch (const std::exception&) {
        row.converged = false; // keep the sweep alive; row is all-zero
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  std::string text = "sweep_value,scheme,common,t1,t2,t3,t4a,t4b,r_x,r_y,converged\n";
  for (const SweepRow& r : rows) {
    append_number(text, r.sweep_value);
    text += ',';
    text += r.scheme;
    for (double v : {r.common, r.alloc.t1, r.alloc.t2, r.alloc.t3, r.alloc.t4a,
                     r.alloc.t4b, r.r_x, r.r_y}) {
      text += ',';
      append_number(text, v);
    }
    text += r.converged ? ",1\n" : ",0\n";
  }
  out << text;
}

void write_csv_file(const std::vector<SweepRow>& rows, const std::string& path) {
  std::ofstream out(path, std::ios::binary); // binary: keep '\n' on any host
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_csv(rows, out);
  if (!out.good()) throw std::runtime_error("write failed: " + path);
}

SweepSpec figure_spec(int figure, int num_points) {
  SweepSpec spec;
  spec.num_points = num_points;

  // Shared operating point: EN-user gains 2.72e-5 / 0.68e-5, user-DN gains
  // 4.25e-7 (free-space at 40 m), inter-user link at 2 m.
  spec.base.h_ex = 2.72e-5;
  spec.base.h_ey = 0.68e-5;
  spec.base.h_xy = path_loss_gain(spec.geometry.d_xy, spec.geometry);
  spec.base.h_yx = spec.base.h_xy;
  spec.base.h_xd = 4.25e-7;
  spec.base.h_yd = 4.25e-7;

  switch (figure) {
    case 6:
      spec.kind = SweepKind::UserToDnDistance;
      spec.start = 25.0;
      spec.stop = 85.0;
      break;
    case 7:
      spec.kind = SweepKind::DnChannelDisparityDb;
      spec.start = 0.0;
      spec.stop = 10.0;
      break;
    case 8:
      spec.kind = SweepKind::EnChannelDisparityDb;
      spec.start = 0.0;
      spec.stop = 12.0;
      break;
    case 9:
      spec.kind = SweepKind::InterUserDistance;
      spec.start = 1.0;
      spec.stop = 10.0;
      break;
    default:
      throw std::domain_error("figure must be 6, 7, 8 or 9");
  }
  return spec;
}

} // namespace wpcn
