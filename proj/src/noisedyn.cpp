#include "noisyqd/noisedyn.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace noisyqd {

namespace {

using Matrix2 = Eigen::Matrix<cplx, 2, 2>;

Matrix2 pauli_x() {
  Matrix2 m;
  m << 0, 1, 1, 0;
  return m;
}

Matrix2 pauli_z() {
  Matrix2 m;
  m << 1, 0, 0, -1;
  return m;
}

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return m;
}

struct Operators {
  Matrix4 sz_a, sz_b, sx_a, sx_b;
  Matrix4 sz_total, sx_total;
};

const Operators& operators() {
  static const Operators ops = [] {
    Operators o;
    o.sz_a = kron(pauli_z(), Matrix2::Identity());
    o.sz_b = kron(Matrix2::Identity(), pauli_z());
    o.sx_a = kron(pauli_x(), Matrix2::Identity());
    o.sx_b = kron(Matrix2::Identity(), pauli_x());
    o.sz_total = o.sz_a + o.sz_b;
    o.sx_total = o.sx_a + o.sx_b;
    return o;
  }();
  return ops;
}

// [S,[S,rho]] for Hermitian S.
Matrix4 double_commutator(const Matrix4& s, const Matrix4& rho) {
  const Matrix4 c = s * rho - rho * s;
  return s * c - c * s;
}

DensityMatrix clean(const Matrix4& m) {
  Matrix4 h = 0.5 * (m + m.adjoint());
  h /= h.trace().real();
  return DensityMatrix::unchecked(h);
}

}  // namespace

double generator_scale(const HamiltonianParams& h, const NoiseConfig& noise) {
  return std::max({noise.gamma_delta, noise.gamma_omega, std::abs(h.delta0), std::abs(h.omega0), 1.0});
}

double default_step(const HamiltonianParams& h, const NoiseConfig& noise) {
  return 0.01 / generator_scale(h, noise);
}

Matrix4 master_rhs(const Matrix4& rho, const HamiltonianParams& h, const NoiseConfig& noise) {
  const Operators& ops = operators();
  Matrix4 out = Matrix4::Zero();
  if (noise.topology == Topology::Global) {
    if (h.delta0 != 0.0 || h.omega0 != 0.0) {
      const Matrix4 h0 = 0.5 * (h.delta0 * ops.sz_total + h.omega0 * ops.sx_total);
      out += cplx(0.0, -1.0) * (h0 * rho - rho * h0);
    }
    if (noise.gamma_delta != 0.0) out -= (noise.gamma_delta / 4.0) * double_commutator(ops.sz_total, rho);
    if (noise.gamma_omega != 0.0) out -= (noise.gamma_omega / 4.0) * double_commutator(ops.sx_total, rho);
  } else {
    if (noise.gamma_delta != 0.0) {
      out -= (noise.gamma_delta / 4.0) *
             (double_commutator(ops.sz_a, rho) + double_commutator(ops.sz_b, rho));
    }
    if (noise.gamma_omega != 0.0) {
      out -= (noise.gamma_omega / 4.0) *
             (double_commutator(ops.sx_a, rho) + double_commutator(ops.sx_b, rho));
    }
  }
  return out;
}

Matrix4 master_rhs(const DensityMatrix& rho, const HamiltonianParams& h, const NoiseConfig& noise) {
  return master_rhs(rho.matrix(), h, noise);
}

Trajectory evolve(const DensityMatrix& rho0, const HamiltonianParams& h, const NoiseConfig& noise,
                  const EvolutionConfig& cfg) {
  if (!(cfg.t_end > 0.0) || !std::isfinite(cfg.t_end)) throw std::invalid_argument("t_end must be positive");
  if (!(cfg.dt > 0.0) || cfg.dt > cfg.t_end) throw std::invalid_argument("dt must satisfy 0 < dt <= t_end");
  if (cfg.record_every < 1) throw std::invalid_argument("record_every must be at least 1");
  if (noise.gamma_delta < 0.0 || noise.gamma_omega < 0.0) {
    throw std::invalid_argument("noise strengths must be non-negative");
  }
  if (cfg.dt * generator_scale(h, noise) > 0.1) {
    throw StepSizeError("dt = " + std::to_string(cfg.dt) + " is too large for generator scale " +
                        std::to_string(generator_scale(h, noise)));
  }

  const auto n_steps = static_cast<long>(std::ceil(cfg.t_end / cfg.dt - 1e-9));
  const double step = cfg.t_end / static_cast<double>(n_steps);

  Trajectory traj;
  const auto n_samples = static_cast<std::size_t>(n_steps / cfg.record_every + 2);
  traj.times.reserve(n_samples);
  traj.states.reserve(n_samples);
  traj.times.push_back(0.0);
  traj.states.push_back(rho0);

  auto f = [&](const Matrix4& r) { return master_rhs(r, h, noise); };
  Matrix4 rho = rho0.matrix();
  for (long n = 1; n <= n_steps; ++n) {
    const Matrix4 k1 = f(rho);
    const Matrix4 k2 = f(rho + (0.5 * step) * k1);
    const Matrix4 k3 = f(rho + (0.5 * step) * k2);
    const Matrix4 k4 = f(rho + step * k3);
    rho += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (n % cfg.record_every == 0 || n == n_steps) {
      traj.times.push_back(n == n_steps ? cfg.t_end : static_cast<double>(n) * step);
      traj.states.push_back(clean(rho));
    }
  }
  return traj;
}

XState dephasing_propagate(const XState& x0, double gamma_delta, double t) {
  if (gamma_delta < 0.0 || t < 0.0) throw std::invalid_argument("gamma_delta and t must be non-negative");
  XState x = x0;
  x.c14 *= std::exp(-4.0 * gamma_delta * t);
  return x;
}

XState steady_detuning_only(const XState& x0) {
  XState x = x0;
  x.c14 = 0.0;
  return x;
}

XState steady_transverse_only(const XState& x0) {
  const double p1 = x0.p1, p2 = x0.p2, p3 = x0.p3, p4 = x0.p4;
  // rho_ij + rho_ji for the two coherences
  const double s14 = 2.0 * x0.c14.real();
  const double s23 = 2.0 * x0.c23.real();
  XState x;
  x.p1 = x.p4 = (3.0 * p1 - s14 + p2 + s23 + p3 + 3.0 * p4) / 8.0;
  x.p2 = x.p3 = (p1 + s14 + 3.0 * p2 - s23 + 3.0 * p3 + p4) / 8.0;
  x.c14 = (-p1 + 3.0 * s14 + p2 + s23 + p3 - p4) / 8.0;
  x.c23 = (p1 + s14 - p2 + 3.0 * s23 - p3 + p4) / 8.0;
  return x;
}

XState steady_collective(const XState& x0) {
  const double p1 = x0.p1, p2 = x0.p2, p3 = x0.p3, p4 = x0.p4;
  const double s23 = 2.0 * x0.c23.real();
  XState x;
  x.p1 = x.p4 = (2.0 * p1 + p2 + s23 + p3 + 2.0 * p4) / 6.0;
  x.p2 = x.p3 = (p1 + 2.0 * p2 - s23 + 2.0 * p3 + p4) / 6.0;
  x.c14 = 0.0;
  x.c23 = (p1 - p2 + 2.0 * s23 - p3 + p4) / 6.0;
  return x;
}

XState steady_local(const XState& x0, const NoiseConfig& noise) {
  if (noise.topology != Topology::Local) throw std::invalid_argument("steady_local needs local topology");
  if (noise.gamma_delta < 0.0 || noise.gamma_omega < 0.0) {
    throw std::invalid_argument("noise strengths must be non-negative");
  }
  if (noise.gamma_delta == 0.0 && noise.gamma_omega == 0.0) {
    throw std::invalid_argument("steady state needs at least one active noise channel");
  }
  XState x;
  if (noise.gamma_delta > 0.0 && noise.gamma_omega == 0.0) {
    x = x0;
    x.c14 = 0.0;
    x.c23 = 0.0;
    return x;
  }
  x.p1 = x.p2 = x.p3 = x.p4 = 0.25;
  if (noise.gamma_delta == 0.0) {
    const double c = 0.5 * (x0.c14.real() + x0.c23.real());
    x.c14 = c;
    x.c23 = c;
  }
  return x;
}

XState steady_state(const XState& x0, const NoiseConfig& noise) {
  if (noise.topology == Topology::Local) return steady_local(x0, noise);
  if (noise.gamma_delta < 0.0 || noise.gamma_omega < 0.0) {
    throw std::invalid_argument("noise strengths must be non-negative");
  }
  const bool detuning = noise.gamma_delta > 0.0;
  const bool transverse = noise.gamma_omega > 0.0;
  if (detuning && transverse) return steady_collective(x0);
  if (detuning) return steady_detuning_only(x0);
  if (transverse) return steady_transverse_only(x0);
  throw std::invalid_argument("steady state needs at least one active noise channel");
}

}  // namespace noisyqd
