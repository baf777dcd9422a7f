#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "noisyqd/noisedyn.hpp"
#include "noisyqd/qstate.hpp"

namespace noisyqd {

// Invalid parameter values or combinations. Maps to CLI exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed config text. Carries the 1-based line number.
struct ParseError : ConfigError {
  ParseError(int line, const std::string& what)
      : ConfigError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class InitialKind { Product, Bell, Alpha, Beta, CClass, Werner };

struct InitialStateSpec {
  InitialKind kind = InitialKind::Product;
  ProductState product = ProductState::gg;
  BellState bell = BellState::PsiPlus;
  AlphaFamily family = AlphaFamily::PsiAlphaPlus;
  Sign sign = Sign::Plus;
  double value = 0.0;  // alpha, beta or epsilon
  cplx c{};            // c-class coefficient

  DensityMatrix build() const;
};

// Textual forms:
//   product:gg|ee|eg|ge
//   bell:psi_plus|psi_minus|phi_plus|phi_minus
//   alpha:<phi_alpha_plus|psi_alpha_plus|psi_alpha_minus>:<alpha>
//   beta:<beta>
//   c_class:<plus|minus>:<re>[:<im>]
//   werner:<epsilon>
InitialStateSpec parse_initial_state(const std::string& text);
std::string to_string(const InitialStateSpec& spec);

struct RunConfig {
  InitialStateSpec initial;
  HamiltonianParams hamiltonian;
  NoiseConfig noise;
  EvolutionConfig evolution;
  std::string output_path;
};

/// Reads a `key = value` file (one per line, `#` starts a comment).
///
/// Keys: initial, delta0, omega0, gamma_delta, gamma_omega, topology
/// (global|local), t_end, dt, record_every, output. Only `initial` is
/// required. When absent, dt defaults to 0.01 / max(1, |rates|) and t_end to
/// 20 / min(active gamma), or 10 without noise; record_every defaults to 10.
RunConfig parse_config(const std::filesystem::path& path);
RunConfig parse_config_text(const std::string& text);

// Throws ConfigError naming the offending field.
void validate(const RunConfig& cfg);

}  // namespace noisyqd
