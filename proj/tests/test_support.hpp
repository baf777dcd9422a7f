#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "noisyqd/qstate.hpp"

namespace noisyqd::testing {

// Flat-simplex populations, coherence magnitudes uniform up to the PSD bound,
// uniform phases. Valid by construction.
inline XState random_x_state(std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double w[4];
  double total = 0.0;
  for (double& v : w) total += (v = expo(rng));
  XState x;
  x.p1 = w[0] / total;
  x.p2 = w[1] / total;
  x.p3 = w[2] / total;
  x.p4 = w[3] / total;
  const double two_pi = 2.0 * std::numbers::pi;
  x.c14 = std::polar(unit(rng) * std::sqrt(x.p1 * x.p4), two_pi * unit(rng));
  x.c23 = std::polar(unit(rng) * std::sqrt(x.p2 * x.p3), two_pi * unit(rng));
  return x;
}

inline double max_abs_diff(const Matrix4& a, const Matrix4& b) { return (a - b).cwiseAbs().maxCoeff(); }

inline double max_abs_diff(const XState& a, const XState& b) {
  return max_abs_diff(a.to_density().matrix(), b.to_density().matrix());
}

}  // namespace noisyqd::testing
