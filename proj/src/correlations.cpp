#include "noisyqd/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace noisyqd {

namespace {

using Matrix2 = Eigen::Matrix<cplx, 2, 2>;
using Matrix3 = Eigen::Matrix3d;

constexpr double kEntropySlack = 1e-12;

std::array<Matrix2, 3> paulis() {
  Matrix2 x, y, z;
  x << 0, 1, 1, 0;
  y << 0, cplx(0, -1), cplx(0, 1), 0;
  z << 1, 0, 0, -1;
  return {x, y, z};
}

// Tr[(a (x) b) rho] with a acting on qubit A.
double expectation(const Matrix4& rho, const Matrix2& a, const Matrix2& b) {
  cplx acc = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) acc += a(i, j) * b(k, l) * rho(2 * j + l, 2 * i + k);
  return acc.real();
}

double von_neumann(const Matrix4& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix4> solver(rho, Eigen::EigenvaluesOnly);
  return shannon_entropy(solver.eigenvalues());
}

double von_neumann(const Matrix2& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix2> solver(rho, Eigen::EigenvaluesOnly);
  return shannon_entropy(solver.eigenvalues());
}

Matrix2 reduced(const Matrix4& rho, Party keep) {
  Matrix2 r = Matrix2::Zero();
  for (int a = 0; a < 2; ++a)
    for (int ap = 0; ap < 2; ++ap)
      for (int s = 0; s < 2; ++s) {
        if (keep == Party::A) {
          r(a, ap) += rho(2 * a + s, 2 * ap + s);
        } else {
          r(a, ap) += rho(2 * s + a, 2 * s + ap);
        }
      }
  return r;
}

// Sum over outcomes of p * S(conditional state) when `measured` is projected
// onto the Bloch direction (theta, phi) and its antipode.
class ConditionalEntropy {
 public:
  ConditionalEntropy(const Matrix4& rho, Party measured) : rho_(rho), measured_(measured) {}

  double operator()(double theta, double phi) const {
    const double nx = std::sin(theta) * std::cos(phi);
    const double ny = std::sin(theta) * std::sin(phi);
    const double nz = std::cos(theta);
    double total = 0.0;
    for (double sign : {1.0, -1.0}) {
      Matrix2 proj;
      proj << 0.5 * (1.0 + sign * nz), 0.5 * sign * cplx(nx, -ny), 0.5 * sign * cplx(nx, ny),
          0.5 * (1.0 - sign * nz);
      total += weighted_entropy(conditional(proj));
    }
    return total;
  }

 private:
  // Unnormalized post-measurement state of the unmeasured qubit.
  Matrix2 conditional(const Matrix2& proj) const {
    Matrix2 out = Matrix2::Zero();
    for (int u = 0; u < 2; ++u)
      for (int up = 0; up < 2; ++up)
        for (int m = 0; m < 2; ++m)
          for (int mp = 0; mp < 2; ++mp) {
            const cplx r = measured_ == Party::B ? rho_(2 * u + m, 2 * up + mp) : rho_(2 * m + u, 2 * mp + up);
            out(u, up) += r * proj(mp, m);
          }
    return out;
  }

  // -sum lambda log2(lambda / p) for the unnormalized 2x2 block.
  static double weighted_entropy(const Matrix2& m) {
    const double p = m(0, 0).real() + m(1, 1).real();
    if (p <= 0.0) return 0.0;
    const double diff = m(0, 0).real() - m(1, 1).real();
    const double root = std::sqrt(diff * diff + 4.0 * std::norm(m(0, 1)));
    double s = 0.0;
    for (double lam : {0.5 * (p + root), 0.5 * (p - root)}) {
      if (lam > 0.0) s -= lam * std::log2(lam / p);
    }
    return s;
  }

  Matrix4 rho_;
  Party measured_;
};

struct Candidate {
  double value;
  double theta;
  double phi;
};

}  // namespace

double binary_entropy(double x) {
  if (!(x >= -kEntropySlack && x <= 1.0 + kEntropySlack)) {
    throw std::domain_error("binary entropy argument outside [0, 1]");
  }
  x = std::clamp(x, 0.0, 1.0);
  const std::array<double, 2> p{x, 1.0 - x};
  return shannon_entropy(p);
}

double concurrence(const XState& x) {
  const double a = std::abs(x.c14) - std::sqrt(std::max(0.0, x.p2 * x.p3));
  const double b = std::abs(x.c23) - std::sqrt(std::max(0.0, x.p1 * x.p4));
  return 2.0 * std::max({0.0, a, b});
}

double entanglement_of_formation(const XState& x) {
  const double c = std::min(1.0, concurrence(x));
  if (c == 0.0) return 0.0;
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

DiscordResult qd_cc(const XState& x) {
  const auto lambdas = x_eigenvalues(x);
  double sum_lambda_log = 0.0;
  for (double l : lambdas) {
    if (l > 0.0) sum_lambda_log += l * std::log2(l);
  }

  const double z = 1.0 - 2.0 * (x.p3 + x.p4);
  const double coh = std::abs(x.c14) + std::abs(x.c23);
  const double tau = 0.5 * (1.0 + std::sqrt(z * z + 4.0 * coh * coh));
  const double d1 = binary_entropy(tau);
  const double d2 = shannon_entropy(x.populations()) - binary_entropy(x.p1 + x.p3);

  const double s_b = binary_entropy(x.p1 + x.p3);
  const double s_a = binary_entropy(x.p1 + x.p2);
  const double q1 = s_b + sum_lambda_log + d1;
  const double q2 = s_b + sum_lambda_log + d2;
  const double cc1 = s_a - d1;
  const double cc2 = s_a - d2;
  return {std::min(q1, q2), std::max(cc1, cc2)};
}

double mutual_information(const XState& x) {
  const double s_a = binary_entropy(x.p1 + x.p2);
  const double s_b = binary_entropy(x.p1 + x.p3);
  return s_a + s_b - shannon_entropy(x_eigenvalues(x));
}

double gmqd(const XState& x, Party measured) {
  const Matrix4 rho = x.to_density().matrix();
  const auto sigma = paulis();
  const Matrix2 id = Matrix2::Identity();

  Eigen::Vector3d bloch;
  Matrix3 t;  // rows index the measured qubit
  for (int i = 0; i < 3; ++i) {
    bloch(i) = measured == Party::B ? expectation(rho, id, sigma[i]) : expectation(rho, sigma[i], id);
    for (int j = 0; j < 3; ++j) {
      t(i, j) = measured == Party::B ? expectation(rho, sigma[j], sigma[i]) : expectation(rho, sigma[i], sigma[j]);
    }
  }
  const Matrix3 k = bloch * bloch.transpose() + t * t.transpose();
  Eigen::SelfAdjointEigenSolver<Matrix3> solver(k, Eigen::EigenvaluesOnly);
  const double k_max = solver.eigenvalues().maxCoeff();
  return std::max(0.0, 0.25 * (bloch.squaredNorm() + t.squaredNorm() - k_max));
}

double linear_entropy(const XState& x) {
  double purity = 2.0 * std::norm(x.c14) + 2.0 * std::norm(x.c23);
  for (double p : x.populations()) purity += p * p;
  return 4.0 / 3.0 * (1.0 - purity);
}

double qd_oracle(const XState& x, const OracleOptions& opts) {
  if (opts.grid < 2 || opts.refine_iters < 0) throw std::invalid_argument("invalid oracle options");
  const Matrix4 rho = x.to_density().matrix();
  const Party unmeasured = opts.measured == Party::B ? Party::A : Party::B;
  const double s_total = von_neumann(rho);
  const double s_unmeasured = von_neumann(reduced(rho, unmeasured));
  const double s_measured = von_neumann(reduced(rho, opts.measured));
  const double mutual = s_unmeasured + s_measured - s_total;

  const ConditionalEntropy cond(rho, opts.measured);
  const double pi = std::numbers::pi;
  const int n_theta = opts.grid;
  const int n_phi = 2 * opts.grid;
  const double d_theta = pi / (n_theta - 1);
  const double d_phi = 2.0 * pi / n_phi;

  std::vector<Candidate> grid;
  grid.reserve(static_cast<std::size_t>(n_theta) * n_phi);
  for (int i = 0; i < n_theta; ++i) {
    for (int j = 0; j < n_phi; ++j) {
      const double theta = i * d_theta;
      const double phi = j * d_phi;
      grid.push_back({cond(theta, phi), theta, phi});
    }
  }
  // Refine the few best grid points; the landscape can have near-degenerate
  // basins at the poles and on the equator.
  constexpr std::size_t kStarts = 4;
  std::partial_sort(grid.begin(), grid.begin() + kStarts, grid.end(),
                    [](const Candidate& a, const Candidate& b) { return a.value < b.value; });

  double best = grid.front().value;
  for (std::size_t s = 0; s < kStarts; ++s) {
    Candidate c = grid[s];
    double step_theta = d_theta;
    double step_phi = d_phi;
    for (int it = 0; it < opts.refine_iters; ++it) {
      Candidate round_best = c;
      for (int a = -1; a <= 1; ++a) {
        for (int b = -1; b <= 1; ++b) {
          if (a == 0 && b == 0) continue;
          const double theta = std::clamp(c.theta + a * step_theta, 0.0, pi);
          const double phi = c.phi + b * step_phi;
          const double v = cond(theta, phi);
          if (v < round_best.value) round_best = {v, theta, phi};
        }
      }
      c = round_best;
      step_theta *= opts.shrink;
      step_phi *= opts.shrink;
    }
    best = std::min(best, c.value);
  }

  const double classical = s_unmeasured - best;
  return mutual - classical;
}

double qd_oracle(const XState& x, int grid, int refine_iters) {
  OracleOptions opts;
  opts.grid = grid;
  opts.refine_iters = refine_iters;
  return qd_oracle(x, opts);
}

CorrelationRecord measure_all(const XState& x) {
  CorrelationRecord r;
  r.concurrence = concurrence(x);
  r.eof = entanglement_of_formation(x);
  const DiscordResult d = qd_cc(x);
  r.qd = d.qd;
  r.cc = d.cc;
  r.mutual_info = mutual_information(x);
  r.gmqd = gmqd(x);
  r.linear_entropy = linear_entropy(x);
  return r;
}

}  // namespace noisyqd
