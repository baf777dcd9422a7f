#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "noisyqd/config.hpp"
#include "noisyqd/correlations.hpp"
#include "noisyqd/noisedyn.hpp"

namespace noisyqd {

// ---------------------------------------------------------------------------
// CSV helpers

// Fixed 10-decimal rendering; values that round to zero print without sign.
std::string format_value(double v);
std::string record_csv_header(const std::string& first_column);
std::string record_csv_row(double first, const CorrelationRecord& r);
std::string trajectory_csv(const Trajectory& traj);
// key=value lines in CSV column order.
std::string format_record(const CorrelationRecord& r);

// Throws IoError when the file cannot be written.
void write_text_file(const std::filesystem::path& path, const std::string& content);

// ---------------------------------------------------------------------------
// evolve / steady

Trajectory run_trajectory(const RunConfig& cfg);

/// Integrates the configured dynamics and writes one CSV row per sample.
/// With `gnuplot`, also writes `<out>.gp` plotting the discord, EoF and CC
/// columns against time.
void cmd_evolve(const RunConfig& cfg, const std::filesystem::path& out, bool gnuplot = false);

/// Analytic steady state for the configured noise. Throws ConfigError when
/// delta0 or omega0 is non-zero or no noise channel is active.
XState steady_for(const RunConfig& cfg);
CorrelationRecord cmd_steady(const RunConfig& cfg);

// ---------------------------------------------------------------------------
// Table of steady-state correlations

// Printed reference values for one (initial state, noise block) cell group,
// in the order EoF, QD, GMQD, CC, S_L.
using MeasureRow = std::array<double, 5>;

inline constexpr std::array<const char*, 5> kTableMeasures{"EoF", "QD", "GMQD", "CC", "S_L"};

struct Table1Row {
  std::string label;
  std::vector<DensityMatrix> initial_states;  // states sharing the row
  std::array<MeasureRow, 2> computed{};       // rounded to 4 decimals
  std::array<MeasureRow, 2> reference{};
  std::array<MeasureRow, 2> gap{};            // worst over initial_states
};

// Block 0: gamma_delta = 0, gamma_omega > 0. Block 1: both channels active.
std::vector<Table1Row> cmd_table1();
double table1_max_gap(const std::vector<Table1Row>& rows);
std::string format_table1(const std::vector<Table1Row>& rows);
std::string table1_csv(const std::vector<Table1Row>& rows);

// ---------------------------------------------------------------------------
// Parameter scans

enum class ScanNoise { TransverseOnly, Collective };

struct ScanPeak {
  double quadratic_location = 0.0;  // vertex of the 3-point parabola
  double location = 0.0;            // after bracketed golden-section refinement
  double qd = 0.0;                  // steady QD at `location`
};

struct ScanResult {
  std::string parameter;
  std::vector<double> values;
  std::vector<CorrelationRecord> records;
  std::vector<ScanPeak> peaks;
};

CorrelationRecord steady_alpha_record(AlphaFamily family, ScanNoise noise, double alpha);

// Uniform alpha grid over [0, 1] with n_points >= 50 samples.
ScanResult cmd_scan_alpha(AlphaFamily family, ScanNoise noise, int n_points);
// Collective-noise steady correlations over a uniform beta grid, n_points >= 11.
ScanResult cmd_scan_beta(int n_points);

std::string scan_csv(const ScanResult& scan);

}  // namespace noisyqd
