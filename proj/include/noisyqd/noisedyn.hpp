#pragma once

#include <stdexcept>
#include <vector>

#include "noisyqd/qstate.hpp"

namespace noisyqd {

struct StepSizeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EvolutionConfig {
  double t_end = 1.0;  // units of 1/omega
  double dt = 0.01;
  int record_every = 1;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
};

// Largest rate-like scale entering the generator, floored at 1.
double generator_scale(const HamiltonianParams& h, const NoiseConfig& noise);

// Step size used when a config does not set one: 0.01 / generator_scale.
double default_step(const HamiltonianParams& h, const NoiseConfig& noise);

// Time derivative of rho in the rotating frame.
//
// Global noise couples to the collective operators S_a = sigma_a^A + sigma_a^B:
//   -i[H0, rho] - (G_delta/4)[S_z,[S_z,rho]] - (G_omega/4)[S_x,[S_x,rho]]
// with H0 = (delta0 S_z + omega0 S_x)/2. Local noise replaces each double
// commutator with the sum of the single-qubit ones and carries no coherent part.
Matrix4 master_rhs(const Matrix4& rho, const HamiltonianParams& h, const NoiseConfig& noise);
Matrix4 master_rhs(const DensityMatrix& rho, const HamiltonianParams& h, const NoiseConfig& noise);

/// Fixed-step RK4 integration of master_rhs from t = 0 to cfg.t_end.
///
/// The step count is ceil(t_end / dt), so the effective step never exceeds
/// cfg.dt and the last sample lands on t_end. Samples are taken at t = 0,
/// every `record_every` steps and at the final step; each sample is
/// re-Hermitized and trace-normalized.
///
/// Throws StepSizeError when dt * generator_scale > 0.1 and
/// std::invalid_argument on a malformed EvolutionConfig.
Trajectory evolve(const DensityMatrix& rho0, const HamiltonianParams& h, const NoiseConfig& noise,
                  const EvolutionConfig& cfg);

// Closed-form global dephasing (G_omega = 0, delta0 = omega0 = 0):
// rho14 decays as exp(-4 G_delta t), everything else is frozen.
XState dephasing_propagate(const XState& x0, double gamma_delta, double t);

// Long-time limits of the global dynamics with delta0 = omega0 = 0.
XState steady_detuning_only(const XState& x0);
XState steady_transverse_only(const XState& x0);
XState steady_collective(const XState& x0);

// Long-time limit of the local dynamics. Throws std::invalid_argument when
// the topology is not Local or both strengths vanish.
XState steady_local(const XState& x0, const NoiseConfig& noise);

// Dispatches to the steady map matching the noise channels and topology.
XState steady_state(const XState& x0, const NoiseConfig& noise);

}  // namespace noisyqd
