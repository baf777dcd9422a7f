#pragma once

#include <cmath>

#include "noisyqd/qstate.hpp"

namespace noisyqd {

// All entropies are in bits.

struct CorrelationRecord {
  double eof = 0.0;
  double concurrence = 0.0;
  double qd = 0.0;
  double cc = 0.0;
  double mutual_info = 0.0;
  double gmqd = 0.0;
  double linear_entropy = 0.0;
};

struct DiscordResult {
  double qd = 0.0;
  double cc = 0.0;
};

enum class Party { A, B };

// h(x) = -x log2 x - (1-x) log2 (1-x); x is clamped into [0, 1] after a
// 1e-12 slack check, and 0 log 0 is 0.
double binary_entropy(double x);

// -sum p log2 p over a probability list, skipping zeros.
template <typename Range>
double shannon_entropy(const Range& probs);

double concurrence(const XState& x);
double entanglement_of_formation(const XState& x);

/// Closed-form discord and classical correlations of an X state with the
/// measurement on qubit B. Two candidate measurements are compared: one
/// along sigma_z (branch 2) and the best one in the transverse plane
/// (branch 1). QD = min(Q1, Q2), CC = max(CC1, CC2).
DiscordResult qd_cc(const XState& x);

double mutual_information(const XState& x);

/// Geometric discord (Hilbert-Schmidt distance to the nearest
/// classical-quantum state), normalized so that Bell states give 1/2.
double gmqd(const XState& x, Party measured = Party::B);

// (4/3)(1 - Tr rho^2)
double linear_entropy(const XState& x);

struct OracleOptions {
  int grid = 64;  // theta samples; phi uses 2 * grid
  int refine_iters = 40;
  double shrink = 0.6;
  Party measured = Party::B;
};

/// Brute-force discord: dense entropies plus a search over projective
/// measurements on one qubit, parametrized by Bloch angles. A coarse
/// (theta, phi) grid is followed by `refine_iters` rounds of a shrinking
/// 3x3 neighborhood search. Deterministic for fixed options.
double qd_oracle(const XState& x, const OracleOptions& opts = {});
double qd_oracle(const XState& x, int grid, int refine_iters);

CorrelationRecord measure_all(const XState& x);

template <typename Range>
double shannon_entropy(const Range& probs) {
  double s = 0.0;
  for (double p : probs) {
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

}  // namespace noisyqd
