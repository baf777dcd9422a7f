#include "noisyqd/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace noisyqd {

namespace {

constexpr double kThird = 1.0 / 3.0;

double round4(double v) { return std::round(v * 1e4) / 1e4; }

MeasureRow as_row(const CorrelationRecord& r) { return {r.eof, r.qd, r.gmqd, r.cc, r.linear_entropy}; }

NoiseConfig global_noise(double gamma_delta, double gamma_omega) {
  NoiseConfig n;
  n.gamma_delta = gamma_delta;
  n.gamma_omega = gamma_omega;
  n.topology = Topology::Global;
  return n;
}

// Reference cells, exact where a fraction is printed.
const MeasureRow kTransverseProduct{0.0, 0.311, 0.0625, 0.189, 0.833};
const MeasureRow kCollectiveMax{0.0, kThird, 0.0556, 0.0817, 8.0 / 9.0};
const MeasureRow kCollectiveMixed{0.0, 0.126, 0.0556, 0.0817, 8.0 / 9.0};
const MeasureRow kTransverseClassical{0.0, 0.0, 0.0, 1.0, 6.0 / 9.0};
const MeasureRow kBell{1.0, 1.0, 0.5, 1.0, 0.0};

XState steady_alpha(AlphaFamily family, ScanNoise noise, double alpha) {
  const XState x0 = as_x_state(make_alpha_state(family, alpha));
  return noise == ScanNoise::TransverseOnly ? steady_transverse_only(x0) : steady_collective(x0);
}

double steady_alpha_qd(AlphaFamily family, ScanNoise noise, double alpha) {
  return qd_cc(steady_alpha(family, noise, alpha)).qd;
}

// Maximizes f on [lo, hi] by golden-section search; f is unimodal there.
template <typename F>
double golden_max(F f, double lo, double hi, double tol = 1e-12) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

std::vector<double> uniform_grid(int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = static_cast<double>(i) / (n - 1);
  return v;
}

}  // namespace

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10f", v);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string record_csv_header(const std::string& first_column) {
  return first_column + ",eof,concurrence,qd,cc,mutual_info,gmqd,linear_entropy\n";
}

std::string record_csv_row(double first, const CorrelationRecord& r) {
  std::string line = format_value(first);
  for (double v : {r.eof, r.concurrence, r.qd, r.cc, r.mutual_info, r.gmqd, r.linear_entropy}) {
    line += ',';
    line += format_value(v);
  }
  line += '\n';
  return line;
}

std::string trajectory_csv(const Trajectory& traj) {
  std::string out = record_csv_header("t");
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    out += record_csv_row(traj.times[i], measure_all(as_x_state(traj.states[i])));
  }
  return out;
}

std::string format_record(const CorrelationRecord& r) {
  std::ostringstream out;
  out << "eof=" << format_value(r.eof) << '\n'
      << "concurrence=" << format_value(r.concurrence) << '\n'
      << "qd=" << format_value(r.qd) << '\n'
      << "cc=" << format_value(r.cc) << '\n'
      << "mutual_info=" << format_value(r.mutual_info) << '\n'
      << "gmqd=" << format_value(r.gmqd) << '\n'
      << "linear_entropy=" << format_value(r.linear_entropy) << '\n';
  return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

Trajectory run_trajectory(const RunConfig& cfg) {
  validate(cfg);
  return evolve(cfg.initial.build(), cfg.hamiltonian, cfg.noise, cfg.evolution);
}

void cmd_evolve(const RunConfig& cfg, const std::filesystem::path& out, bool gnuplot) {
  const Trajectory traj = run_trajectory(cfg);
  std::string csv;
  try {
    csv = trajectory_csv(traj);
  } catch (const StructureError&) {
    throw ConfigError("evolve: trajectory left the X-state manifold; measures need delta0 = omega0 = 0");
  }
  write_text_file(out, csv);
  if (gnuplot) {
    std::ostringstream gp;
    gp << "set datafile separator ','\n"
       << "set key autotitle columnhead\n"
       << "set xlabel 'omega t'\n"
       << "plot '" << out.filename().string() << "' using 1:4 with lines title 'QD', \\\n"
       << "     '' using 1:2 with lines dashtype 2 title 'EoF', \\\n"
       << "     '' using 1:5 with lines dashtype 3 title 'CC'\n";
    write_text_file(std::filesystem::path(out.string() + ".gp"), gp.str());
  }
}

XState steady_for(const RunConfig& cfg) {
  validate(cfg);
  if (cfg.hamiltonian.delta0 != 0.0 || cfg.hamiltonian.omega0 != 0.0) {
    throw ConfigError("steady: analytic steady states need delta0 = 0 and omega0 = 0");
  }
  if (cfg.noise.gamma_delta == 0.0 && cfg.noise.gamma_omega == 0.0) {
    throw ConfigError("steady: at least one of gamma_delta, gamma_omega must be positive");
  }
  return steady_state(as_x_state(cfg.initial.build()), cfg.noise);
}

CorrelationRecord cmd_steady(const RunConfig& cfg) { return measure_all(steady_for(cfg)); }

std::vector<Table1Row> cmd_table1() {
  std::vector<Table1Row> rows{
      {"gg,ee", {make_product(ProductState::gg), make_product(ProductState::ee)}, {}, {kTransverseProduct, kCollectiveMax}, {}},
      {"eg,ge", {make_product(ProductState::eg), make_product(ProductState::ge)}, {}, {kTransverseProduct, kCollectiveMixed}, {}},
      {"Phi+", {make_bell(BellState::PhiPlus)}, {}, {kTransverseClassical, kCollectiveMax}, {}},
      {"Phi-", {make_bell(BellState::PhiMinus)}, {}, {kBell, kBell}, {}},
      {"Psi+", {make_bell(BellState::PsiPlus)}, {}, {kTransverseClassical, kCollectiveMax}, {}},
      {"Psi-", {make_bell(BellState::PsiMinus)}, {}, {kBell, kCollectiveMax}, {}},
  };
  // Any positive strength gives the same steady state.
  const std::array<NoiseConfig, 2> blocks{global_noise(0.0, 0.05), global_noise(0.05, 0.05)};
  for (auto& row : rows) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (std::size_t s = 0; s < row.initial_states.size(); ++s) {
        const MeasureRow values = as_row(measure_all(steady_state(as_x_state(row.initial_states[s]), blocks[b])));
        for (std::size_t m = 0; m < values.size(); ++m) {
          const double rounded = round4(values[m]);
          if (s == 0) row.computed[b][m] = rounded;
          row.gap[b][m] = std::max(row.gap[b][m], std::abs(rounded - row.reference[b][m]));
        }
      }
    }
  }
  return rows;
}

double table1_max_gap(const std::vector<Table1Row>& rows) {
  double worst = 0.0;
  for (const auto& row : rows)
    for (const auto& block : row.gap)
      for (double g : block) worst = std::max(worst, g);
  return worst;
}

std::string format_table1(const std::vector<Table1Row>& rows) {
  static const std::array<const char*, 2> kBlockNames{"gamma_delta=0, gamma_omega>0",
                                                      "gamma_delta>0, gamma_omega>0"};
  std::ostringstream out;
  char buf[160];
  for (std::size_t b = 0; b < 2; ++b) {
    out << "Steady state, " << kBlockNames[b] << '\n';
    std::snprintf(buf, sizeof buf, "%-8s %-6s %10s %10s %10s\n", "state", "measure", "computed", "reference", "gap");
    out << buf;
    for (const auto& row : rows) {
      for (std::size_t m = 0; m < kTableMeasures.size(); ++m) {
        std::snprintf(buf, sizeof buf, "%-8s %-6s %10.4f %10.4f %10.4f\n", m == 0 ? row.label.c_str() : "",
                      kTableMeasures[m], row.computed[b][m], row.reference[b][m], row.gap[b][m]);
        out << buf;
      }
    }
    out << '\n';
  }
  std::snprintf(buf, sizeof buf, "max gap %.4f\n", table1_max_gap(rows));
  out << buf;
  return out.str();
}

std::string table1_csv(const std::vector<Table1Row>& rows) {
  std::string out = "state,block,measure,computed,reference,gap\n";
  static const std::array<const char*, 2> kBlocks{"transverse_only", "collective"};
  for (const auto& row : rows) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t m = 0; m < kTableMeasures.size(); ++m) {
        out += '"' + row.label + "\"," + kBlocks[b] + ',' + kTableMeasures[m] + ',' + format_value(row.computed[b][m]) +
               ',' + format_value(row.reference[b][m]) + ',' + format_value(row.gap[b][m]) + '\n';
      }
    }
  }
  return out;
}

CorrelationRecord steady_alpha_record(AlphaFamily family, ScanNoise noise, double alpha) {
  return measure_all(steady_alpha(family, noise, alpha));
}

ScanResult cmd_scan_alpha(AlphaFamily family, ScanNoise noise, int n_points) {
  if (n_points < 50) throw ConfigError("points: alpha scan needs at least 50 points");
  ScanResult scan;
  scan.parameter = "alpha";
  scan.values = uniform_grid(n_points);
  scan.records.reserve(scan.values.size());
  for (double a : scan.values) scan.records.push_back(steady_alpha_record(family, noise, a));

  // Interior grid maxima; plateaus (differences at round-off level) are skipped.
  constexpr double kPlateau = 1e-9;
  for (std::size_t i = 1; i + 1 < scan.values.size(); ++i) {
    const double left = scan.records[i - 1].qd;
    const double mid = scan.records[i].qd;
    const double right = scan.records[i + 1].qd;
    if (mid < left || mid < right) continue;
    if (std::max(mid - left, mid - right) <= kPlateau) continue;

    const double x0 = scan.values[i - 1], x1 = scan.values[i], x2 = scan.values[i + 1];
    const double h = x1 - x0;
    const double denom = left - 2.0 * mid + right;
    ScanPeak peak;
    peak.quadratic_location = denom < 0.0 ? x1 + 0.5 * h * (left - right) / denom : x1;
    // The curve has a cusp at its maxima where the two discord branches
    // cross, so the parabola only seeds a bracketed search.
    peak.location = golden_max([&](double a) { return steady_alpha_qd(family, noise, a); }, x0, x2);
    peak.qd = steady_alpha_qd(family, noise, peak.location);
    scan.peaks.push_back(peak);
  }
  return scan;
}

ScanResult cmd_scan_beta(int n_points) {
  if (n_points < 11) throw ConfigError("points: beta scan needs at least 11 points");
  ScanResult scan;
  scan.parameter = "beta";
  scan.values = uniform_grid(n_points);
  for (double b : scan.values) {
    scan.records.push_back(measure_all(steady_collective(as_x_state(make_beta_state(b)))));
  }
  return scan;
}

std::string scan_csv(const ScanResult& scan) {
  std::string out = record_csv_header(scan.parameter);
  for (std::size_t i = 0; i < scan.values.size(); ++i) out += record_csv_row(scan.values[i], scan.records[i]);
  return out;
}

}  // namespace noisyqd
