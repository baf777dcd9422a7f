#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace noisyqd {

using cplx = std::complex<double>;
using Matrix4 = Eigen::Matrix<cplx, 4, 4>;

// Basis order used everywhere: |1> = |ee>, |2> = |eg>, |3> = |ge>, |4> = |gg>.
// Qubit A is the left factor. |e> is the sigma_z = +1 eigenstate.
namespace basis {
inline constexpr int ee = 0;
inline constexpr int eg = 1;
inline constexpr int ge = 2;
inline constexpr int gg = 3;
}  // namespace basis

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A matrix that was expected to be X-shaped carries off-X weight.
struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kOffXTol = 1e-10;

/// Two-qubit density matrix. Construction through `from_matrix` validates
/// Hermiticity, unit trace and positivity; the unchecked constructor is for
/// integrator internals that clean up afterwards.
class DensityMatrix {
 public:
  DensityMatrix() : m_(Matrix4::Zero()) { m_(basis::gg, basis::gg) = 1.0; }

  static DensityMatrix from_matrix(const Matrix4& m);
  static DensityMatrix unchecked(const Matrix4& m) { return DensityMatrix(m); }

  const Matrix4& matrix() const { return m_; }
  cplx operator()(int i, int j) const { return m_(i, j); }

  double trace() const { return m_.trace().real(); }
  double hermiticity_defect() const;
  double min_eigenvalue() const;
  // Largest magnitude among rho12, rho13, rho24, rho34 and their conjugates.
  double off_x_leakage() const;

 private:
  explicit DensityMatrix(const Matrix4& m) : m_(m) {}
  Matrix4 m_;
};

/// Compact view of an X-shaped density matrix: populations p1..p4 on the
/// diagonal and the two anti-diagonal coherences rho14, rho23.
struct XState {
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;
  double p4 = 1.0;
  cplx c14{};
  cplx c23{};

  std::array<double, 4> populations() const { return {p1, p2, p3, p4}; }
  DensityMatrix to_density() const;
};

// Checks unit sum, non-negative populations and PSD of both 2x2 blocks.
bool is_valid(const XState& x, double tol = 1e-12);
void require_valid(const XState& x);

struct HamiltonianParams {
  double delta0 = 0.0;  // detuning, units of omega
  double omega0 = 0.0;  // Rabi frequency, units of omega
};

enum class Topology { Global, Local };

struct NoiseConfig {
  double gamma_delta = 0.0;
  double gamma_omega = 0.0;
  Topology topology = Topology::Global;
};

enum class ProductState { gg, ee, eg, ge };
enum class BellState { PsiPlus, PsiMinus, PhiPlus, PhiMinus };
enum class AlphaFamily { PhiAlphaPlus, PsiAlphaPlus, PsiAlphaMinus };
enum class Sign { Plus, Minus };

DensityMatrix make_product(ProductState which);
DensityMatrix make_bell(BellState which);
DensityMatrix make_alpha_state(AlphaFamily which, double alpha);
// beta |Psi+><Psi+| + (1 - beta) |Phi+><Phi+|
DensityMatrix make_beta_state(double beta);
// (1/3)(|Phi+-><Phi+-| + |ee><ee| + |gg><gg|) + c|ee><gg| + h.c.
DensityMatrix make_c_class(Sign sign, cplx c);
// (1 - eps)/4 I + eps |Phi-><Phi-|
DensityMatrix make_werner(double epsilon);

XState as_x_state(const DensityMatrix& rho);

/// Spectrum of an X state from its two 2x2 blocks, sorted descending.
std::array<double, 4> x_eigenvalues(const XState& x);

std::string to_string(ProductState s);
std::string to_string(BellState s);
std::string to_string(AlphaFamily f);

}  // namespace noisyqd
