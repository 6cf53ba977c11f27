// Acceptance harness: one [PASS]/[FAIL] line per criterion, exit code equals
// the number of failed criteria. Runs against the library plus the installed
// CLI binary (path injected as WPCN_CLI_PATH).

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "wpcn/oracle.hpp"
#include "wpcn/solver.hpp"
#include "wpcn/sweep.hpp"

#ifndef WPCN_CLI_PATH
#error "WPCN_CLI_PATH must be defined"
#endif

using namespace wpcn;
using wpcn::testing::Instance;
using wpcn::testing::InstanceGen;

namespace {

namespace fs = std::filesystem;

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion,
              detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// ---- shared instance suite -------------------------------------------------

constexpr int kInstances = 100;
constexpr std::array<SchemeKind, 7> kKinds = {
    SchemeKind::StbcNjd, SchemeKind::StbcJd, SchemeKind::DtbNjd,
    SchemeKind::DtbJd,   SchemeKind::RelayNjd, SchemeKind::RelayJd,
    SchemeKind::NonCoop};
enum { kStbcNjd, kStbcJd, kDtbNjd, kDtbJd, kRelayNjd, kRelayJd, kNonCoop };

// Residual target of the published interface is 1e-7; the suite solves one
// hundred times tighter so solver noise cannot mask the properties under
// test (orderings at 1e-9, residuals at 1e-7).
SolverConfig suite_config() {
  SolverConfig cfg;
  cfg.rate_tolerance = 1e-9;
  return cfg;
}

std::vector<Instance> draw_instances() {
  InstanceGen gen(42);
  std::vector<Instance> out;
  out.reserve(kInstances);
  for (int i = 0; i < kInstances; ++i) out.push_back(gen.draw());
  return out;
}

using SolveMatrix = std::vector<std::array<SolveResult, kKinds.size()>>;

SolveMatrix solve_all(const std::vector<Instance>& suite) {
  const SolverConfig cfg = suite_config();
  SolveMatrix out(suite.size());
  for (size_t i = 0; i < suite.size(); ++i) {
    for (size_t k = 0; k < kKinds.size(); ++k) {
      out[i][k] = solve_scheme(Scheme{kKinds[k]}, suite[i].params,
                               suite[i].channels, cfg);
    }
  }
  return out;
}

// ---- criterion 1: oracle equivalence ---------------------------------------

// Largest |d common / d coordinate| at `a`, central differences where the
// coordinate allows it. Coordinates follow each scheme family's layout, so
// every probe stays inside the family's allocation shape.
double max_abs_slope(const Scheme& s, const CoefficientSet& c,
                     const TimeAllocation& a) {
  using Mut = std::function<TimeAllocation(double)>;
  std::vector<std::pair<double, Mut>> coords;
  const auto with = [&](double base, Mut m) { coords.emplace_back(base, m); };

  with(a.t1, [&](double v) { auto b = a; b.t1 = v; return b; });
  with(a.t2, [&](double v) { auto b = a; b.t2 = v; return b; });
  switch (s.kind) {
    case SchemeKind::StbcNjd:
    case SchemeKind::StbcJd:
    case SchemeKind::DtbNjd:
      with(a.t3, [&](double v) { auto b = a; b.t3 = v; return b; });
      with(a.t4(), [&](double v) { auto b = a; b.t4a = b.t4b = 0.5 * v; return b; });
      break;
    case SchemeKind::DtbJd:
      with(a.t3, [&](double v) { auto b = a; b.t3 = v; return b; });
      with(a.t4a, [&](double v) { auto b = a; b.t4a = v; return b; });
      with(a.t4b, [&](double v) { auto b = a; b.t4b = v; return b; });
      break;
    case SchemeKind::RelayNjd:
    case SchemeKind::RelayJd:
      with(a.t4a, [&](double v) { auto b = a; b.t4a = v; return b; });
      with(a.t4b, [&](double v) { auto b = a; b.t4b = v; return b; });
      break;
    case SchemeKind::NonCoop:
      with(a.t3, [&](double v) { auto b = a; b.t3 = v; return b; });
      break;
  }

  const double d = 1e-6;
  double worst = 0.0;
  for (const auto& [base, mut] : coords) {
    const double up = scheme_rates(mut(base + d), c, s).common();
    double slope;
    if (base >= d) {
      slope = (up - scheme_rates(mut(base - d), c, s).common()) / (2.0 * d);
    } else {
      slope = (up - scheme_rates(mut(base), c, s).common()) / d;
    }
    worst = std::max(worst, std::abs(slope));
  }
  return worst;
}

void criterion1(const std::vector<Instance>& suite, const SolveMatrix& solved) {
  const auto start = std::chrono::steady_clock::now();
  const double h = 5e-3; // oracle lattice pitch under test

  int checked = 0, plain_ok = 0, full_ok = 0, sandwich_ok = 0;
  double worst_rel = 0.0;
  for (size_t i = 0; i < suite.size(); ++i) {
    const Instance& ins = suite[i];
    for (size_t k = 0; k < kKinds.size(); ++k) {
      const Scheme scheme{kKinds[k]};
      const SolveResult grid =
          oracle_grid(scheme, ins.params, ins.channels, ins.coeffs, h);
      const double sv = solved[i][k].common;
      const double ov = grid.common;

      if (kKinds[k] == SchemeKind::StbcJd) {
        // The reported value is achievable, not optimal: it must sit between
        // the plain-scheme optimum and the grid's joint-decoding optimum.
        const double lo = solved[i][kStbcNjd].common;
        const double slope = max_abs_slope(scheme, ins.coeffs, grid.allocation);
        const double tol =
            std::max({1e-4, 0.01 * std::max(sv, ov), 2.0 * h * slope});
        sandwich_ok += (sv >= lo && sv <= ov + tol);
        continue;
      }

      ++checked;
      const double diff = std::abs(sv - ov);
      const double plain = std::max(1e-4, 0.01 * std::max(std::abs(sv), std::abs(ov)));
      plain_ok += (diff <= plain);
      // The grid is the coarse side: widen by its resolution error, measured
      // as lattice pitch times the local slope at the grid's own argmax.
      const double slope = max_abs_slope(scheme, ins.coeffs, grid.allocation);
      full_ok += (diff <= std::max(plain, 2.0 * h * slope));
      if (std::max(std::abs(sv), std::abs(ov)) > 0.0) {
        worst_rel = std::max(worst_rel, diff / std::max(std::abs(sv), std::abs(ov)));
      }
    }
  }

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  const bool ok =
      full_ok == checked && sandwich_ok == kInstances && secs < 300.0;
  report(1, ok,
         "solver vs brute-force grid on " + std::to_string(kInstances) +
             " random instances: " + std::to_string(full_ok) + "/" +
             std::to_string(checked) +
             " within resolution-aware tolerance (plain 1%/1e-4 floor: " +
             std::to_string(plain_ok) + "/" + std::to_string(checked) +
             "), achievable-value sandwich " + std::to_string(sandwich_ok) +
             "/" + std::to_string(kInstances) + ", worst rel gap " +
             fmt("%.2e", worst_rel) + ", runtime " + fmt("%.0f", secs) + "s");
}

// ---- criterion 2: equal-rate optimality conditions -------------------------

void criterion2(const std::vector<Instance>& suite, const SolveMatrix& solved) {
  const double sigma = 1e-7;
  int converged = 0, balanced = 0, boundary = 0;
  double worst = 0.0;
  for (size_t i = 0; i < suite.size(); ++i) {
    for (size_t k : {kStbcNjd, kStbcJd, kDtbNjd, kDtbJd}) {
      const SolveResult& r = solved[i][k];
      if (!r.converged) continue;
      ++converged;
      // The joint-decoding evaluation rides on the plain-scheme optimum, so
      // its balance conditions are the plain scheme's.
      const RatePair rr = kKinds[k] == SchemeKind::StbcJd
                              ? scheme_rates(r.allocation, suite[i].coeffs,
                                             Scheme{SchemeKind::StbcNjd})
                              : r.rates;
      const TimeAllocation& a = r.allocation;
      double res = std::abs(rr.r_x2 - rr.r_y3);
      bool ok = res < sigma;
      if (kKinds[k] == SchemeKind::DtbJd) {
        if (a.t4a == 0.0 || a.t4b == 0.0) {
          // A pinned joint slot or share leaves some decode path strictly
          // above the common value, so the equality chain through the
          // individual constituents does not apply; the balance identifying
          // such an optimum is between the two users' attained rates.
          res = std::abs(rr.r_x() - rr.r_y());
          ok = res < sigma;
          ++boundary;
        } else {
          const double m4 = std::min(rr.r_x4, rr.r_y4);
          res = std::max(res, std::abs(rr.r_x2 - m4));
          res = std::max(res, std::abs(rr.r_x4 - rr.r_y4));
          ok = ok && res < sigma;
        }
      } else {
        res = std::max(res, std::abs(rr.r_x2 - rr.r_x4));
        ok = ok && res < sigma;
      }
      balanced += ok;
      if (ok) worst = std::max(worst, res);
    }
  }
  report(2, balanced == converged && converged > 0,
         "equal-rate residuals below 1e-7 on " + std::to_string(balanced) +
             "/" + std::to_string(converged) +
             " converged cooperative optima (" + std::to_string(boundary) +
             " pinned-boundary splits waived), worst residual " +
             fmt("%.2e", worst));
}

// ---- criterion 3: monotonicity suites --------------------------------------

void criterion3() {
  InstanceGen gen(7);
  const int points = 1000;
  const double slack = 1e-12;
  int viol = 0;

  // Exchange slots: r_x2 rises and r_y3 falls as t2 grows at fixed total.
  for (int i = 0; i < 20; ++i) {
    const Instance ins = gen.draw();
    const double budget = 1.0 - ins.params.t0;
    const double t1 = (0.1 + 0.8 * gen.uniform01()) * budget;
    const double t4 = (0.1 + 0.8 * gen.uniform01()) * (budget - t1);
    const double total23 = budget - t1 - t4;
    double prev_x = -1.0, prev_y = HUGE_VAL;
    for (int p = 0; p < points; ++p) {
      const double t2 = total23 * p / (points - 1);
      const TimeAllocation a{t1, t2, total23 - t2, 0.5 * t4, 0.5 * t4};
      const RatePair r = exchange_rates(a, ins.coeffs);
      viol += (r.r_x2 < prev_x - slack);
      viol += (r.r_y3 > prev_y + slack);
      prev_x = r.r_x2;
      prev_y = r.r_y3;
    }
  }

  // Joint slot: with the exchange re-balanced per point, r_x4 rises and
  // r_x2 falls as t4 grows at fixed total. Checked for both joint codings.
  for (int i = 0; i < 20; ++i) {
    const Instance ins = gen.draw();
    const double budget = 1.0 - ins.params.t0;
    const double t1 = (0.1 + 0.8 * gen.uniform01()) * budget;
    const double total = budget - t1;
    double prev_x2 = HUGE_VAL, prev_s = -1.0, prev_d = -1.0;
    for (int p = 0; p < points; ++p) {
      const double t4 = total * p / (points - 1);
      const ExchangeSplit ex =
          equalize_exchange(ins.coeffs, t1, t4, total - t4, 1e-13, 1e-15, 400);
      const TimeAllocation a{t1, ex.t2, ex.t3, 0.5 * t4, 0.5 * t4};
      const double s4 =
          cooperative_rates(a, ins.coeffs, Scheme{SchemeKind::StbcNjd}).r_x4;
      const double d4 =
          cooperative_rates(a, ins.coeffs, Scheme{SchemeKind::DtbNjd}).r_x4;
      viol += (ex.r_x2 > prev_x2 + slack);
      viol += (s4 < prev_s - slack);
      viol += (d4 < prev_d - slack);
      prev_x2 = ex.r_x2;
      prev_s = s4;
      prev_d = d4;
    }
  }

  report(3, viol == 0,
         "rate monotonicity, 20 instances x 1000-point sweeps per slot "
         "family: " + std::to_string(viol) + " violations beyond 1e-12");
}

// ---- criterion 4: scheme ordering -------------------------------------------

void criterion4(const SolveMatrix& solved) {
  const double slack = 1e-9;
  int ok_count = 0, total = 0;
  double worst = 1.0;
  const auto expect_ge = [&](double a, double b) {
    ++total;
    ok_count += (a >= b - slack);
    worst = std::min(worst, a - b);
  };
  for (const auto& row : solved) {
    expect_ge(row[kDtbJd].common, row[kDtbNjd].common);
    expect_ge(row[kDtbNjd].common, row[kStbcNjd].common);
    expect_ge(row[kStbcJd].common, row[kStbcNjd].common);
    expect_ge(row[kRelayJd].common, row[kRelayNjd].common);
  }
  report(4, ok_count == total,
         "orderings (coherent>=non-coherent, joint-decoding>=plain) on all "
         "instances: " + std::to_string(ok_count) + "/" + std::to_string(total) +
             ", worst margin " + fmt("%.2e", worst));
}

// ---- criterion 5: path-loss reference gains ----------------------------------

void criterion5() {
  const Geometry geom; // 915 MHz, exponent 2, unit antenna gain
  const double g5 = path_loss_gain(5.0, geom);
  const double g40 = path_loss_gain(40.0, geom);
  const bool ok = std::abs(g5 - 2.72e-5) <= 0.01 * 2.72e-5 &&
                  std::abs(g40 - 4.25e-7) <= 0.01 * 4.25e-7;
  report(5, ok,
         "reference link gains: gain(5m) = " + fmt("%.4e", g5) +
             " vs 2.72e-5, gain(40m) = " + fmt("%.4e", g40) +
             " vs 4.25e-7 (1% window)");
}

// ---- criteria 6 and 7: built-in sweeps via the CLI ---------------------------

int run_cli(const std::string& args) {
  const std::string cmd = std::string(WPCN_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Curve {
  std::vector<double> common;
};

// scheme tag -> curve, points in ascending sweep order
std::map<std::string, Curve> read_curves(const fs::path& p) {
  std::map<std::string, Curve> out;
  std::istringstream in(slurp(p));
  std::string line;
  std::getline(in, line); // header
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 11) continue;
    out[fields[1]].common.push_back(std::stod(fields[2]));
  }
  return out;
}

bool nonincreasing(const Curve& c, double slack) {
  for (size_t i = 1; i < c.common.size(); ++i) {
    if (c.common[i] > c.common[i - 1] + slack) return false;
  }
  return true;
}

void criteria67() {
  const fs::path base = fs::temp_directory_path();
  const fs::path a = base / "wpcn_acc_figs_a";
  const fs::path b = base / "wpcn_acc_figs_b";
  const fs::path c = base / "wpcn_acc_figs_c";
  for (const auto& dir : {a, b, c}) fs::remove_all(dir);

  const std::string pts = " --points 9";
  const bool ran = run_cli("figures --out " + a.string() + pts) == 0 &&
                   run_cli("figures --out " + b.string() + pts) == 0 &&
                   run_cli("figures --out " + c.string() + pts + " --serial") == 0;

  // criterion 6: qualitative curve shapes of the built-in sweeps
  bool shapes = ran;
  std::string why = ran ? "" : "figures runs failed; ";
  if (ran) {
    const double slack = 1e-9;
    const auto fig6 = read_curves(a / "fig6.csv");
    for (const auto& [tag, curve] : fig6) {
      if (!nonincreasing(curve, slack)) {
        shapes = false;
        why += "distance sweep not nonincreasing for " + tag + "; ";
      }
    }
    const auto& dj = fig6.at("dtb-jd").common;
    const auto& dn = fig6.at("dtb-njd").common;
    for (size_t i = 0; i < dj.size(); ++i) {
      const double top = std::min(dj[i], dn[i]);
      for (const char* tag : {"stbc-njd", "stbc-jd", "relay-njd", "relay-jd",
                              "non-coop"}) {
        if (top < fig6.at(tag).common[i] - slack) {
          shapes = false;
          why += std::string("coherent schemes not uppermost vs ") + tag +
                 " at distance point " + std::to_string(i) + "; ";
        }
      }
    }

    const auto fig9 = read_curves(a / "fig9.csv");
    const auto& nc9 = fig9.at("non-coop").common;
    const double span = *std::max_element(nc9.begin(), nc9.end()) -
                        *std::min_element(nc9.begin(), nc9.end());
    if (span > 1e-12) {
      shapes = false;
      why += "non-coop varies with inter-user distance; ";
    }
    for (const char* tag : {"stbc-njd", "stbc-jd", "dtb-njd", "dtb-jd"}) {
      if (!nonincreasing(fig9.at(tag), slack)) {
        shapes = false;
        why += std::string("inter-user sweep not nonincreasing for ") + tag + "; ";
      }
    }

    const auto fig8 = read_curves(a / "fig8.csv");
    const auto& nc8 = fig8.at("non-coop").common;
    const auto& dj8 = fig8.at("dtb-jd").common;
    const double nc_drop = (nc8.front() - nc8.back()) / nc8.front();
    const double dj_drop = (dj8.front() - dj8.back()) / dj8.front();
    if (!(nc_drop > dj_drop)) {
      shapes = false;
      why += "energy-disparity sweep: baseline does not degrade faster; ";
    } else {
      why += "energy-disparity drop " + fmt("%.3f", nc_drop) +
             " (baseline) vs " + fmt("%.3f", dj_drop) + " (coherent JD); ";
    }
  }
  if (why.size() >= 2 && why.compare(why.size() - 2, 2, "; ") == 0) {
    why.erase(why.size() - 2);
  }
  report(6, shapes, "built-in sweep shapes at 9 points: " +
                        (why.empty() ? std::string("all hold") : why));

  // criterion 7: byte-identical regeneration, parallel and serial
  bool identical = ran;
  for (const char* name : {"fig6.csv", "fig7.csv", "fig8.csv", "fig9.csv"}) {
    if (!ran) break;
    const std::string ref = slurp(a / name);
    identical = identical && !ref.empty() && slurp(b / name) == ref &&
                slurp(c / name) == ref;
  }
  report(7, identical,
         "figures regenerated twice plus serially: all four CSVs byte-identical");
}

} // namespace

int main() {
  const std::vector<Instance> suite = draw_instances();
  const SolveMatrix solved = solve_all(suite);

  criterion1(suite, solved);
  criterion2(suite, solved);
  criterion3();
  criterion4(solved);
  criterion5();
  criteria67();

  std::printf("%d criteria failed\n", g_failures);
  return g_failures;
}
