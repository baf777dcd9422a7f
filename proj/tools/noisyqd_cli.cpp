// noisyqd: two-qubit correlations under classical white noise.
//
//   noisyqd evolve     --config run.cfg [--out traj.csv] [--gnuplot]
//   noisyqd steady     --config run.cfg
//   noisyqd table1     [--out table1.csv]
//   noisyqd scan-alpha [--family psi_alpha_plus] [--noise transverse] [--points 501] [--out scan.csv]
//   noisyqd scan-beta  [--points 101] [--out scan.csv]
//
// Exit codes: 0 success, 2 configuration or validation error, 1 anything else.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "noisyqd/config.hpp"
#include "noisyqd/scenarios.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitInternal = 1;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    noisyqd::write_text_file(out_path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace noisyqd;

  CLI::App app{"Two-qubit correlations under global or local classical white noise"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  bool gnuplot = false;
  int points = 0;
  std::string family = "psi_alpha_plus";
  std::string noise_case = "transverse";

  auto* evolve = app.add_subcommand("evolve", "integrate the master equation and write a CSV trajectory");
  evolve->add_option("--config", config_path, "run configuration file")->required();
  evolve->add_option("--out", out_path, "CSV output path (overrides `output` in the config)");
  evolve->add_flag("--gnuplot", gnuplot, "also write <out>.gp");

  auto* steady = app.add_subcommand("steady", "print analytic steady-state correlations");
  steady->add_option("--config", config_path, "run configuration file")->required();

  auto* table1 = app.add_subcommand("table1", "steady correlations for product and Bell initial states");
  table1->add_option("--out", out_path, "also write the table as CSV");

  auto* scan_alpha = app.add_subcommand("scan-alpha", "steady discord over the alpha-parametrized family");
  scan_alpha->add_option("--family", family, "phi_alpha_plus | psi_alpha_plus")
      ->check(CLI::IsMember({"phi_alpha_plus", "psi_alpha_plus"}));
  scan_alpha->add_option("--noise", noise_case, "transverse | collective")
      ->check(CLI::IsMember({"transverse", "collective"}));
  scan_alpha->add_option("--points", points, "grid size (>= 50, default 501)");
  scan_alpha->add_option("--out", out_path, "CSV output path (default stdout)");

  auto* scan_beta = app.add_subcommand("scan-beta", "collective-noise steady correlations of beta states");
  scan_beta->add_option("--points", points, "grid size (>= 11, default 101)");
  scan_beta->add_option("--out", out_path, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*evolve) {
      const RunConfig cfg = parse_config(config_path);
      const std::string target = out_path.empty() ? cfg.output_path : out_path;
      if (target.empty()) throw ConfigError("output: no output path (use --out or `output =` in the config)");
      cmd_evolve(cfg, target, gnuplot);
    } else if (*steady) {
      std::cout << format_record(cmd_steady(parse_config(config_path)));
    } else if (*table1) {
      const auto rows = cmd_table1();
      std::cout << format_table1(rows);
      if (!out_path.empty()) write_text_file(out_path, table1_csv(rows));
    } else if (*scan_alpha) {
      const AlphaFamily fam = family == "phi_alpha_plus" ? AlphaFamily::PhiAlphaPlus : AlphaFamily::PsiAlphaPlus;
      const ScanNoise noise = noise_case == "transverse" ? ScanNoise::TransverseOnly : ScanNoise::Collective;
      const ScanResult scan = cmd_scan_alpha(fam, noise, points == 0 ? 501 : points);
      emit(scan_csv(scan), out_path);
      for (const auto& peak : scan.peaks) {
        std::fprintf(stderr, "peak alpha=%.6f (parabola %.6f) qd=%.6f\n", peak.location, peak.quadratic_location,
                     peak.qd);
      }
    } else if (*scan_beta) {
      emit(scan_csv(cmd_scan_beta(points == 0 ? 101 : points)), out_path);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
