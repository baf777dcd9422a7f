#include "noisyqd/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace noisyqd {

namespace {

Matrix4 projector(const Eigen::Matrix<cplx, 4, 1>& psi) { return psi * psi.adjoint(); }

Eigen::Matrix<cplx, 4, 1> ket(cplx ee, cplx eg, cplx ge, cplx gg) {
  Eigen::Matrix<cplx, 4, 1> v;
  v << ee, eg, ge, gg;
  return v;
}

void require_unit_interval(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw DomainError(std::string(name) + " must lie in [0, 1], got " + std::to_string(value));
  }
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(const Matrix4& m) {
  DensityMatrix rho(m);
  if (rho.hermiticity_defect() > kHermitianTol) {
    throw DomainError("density matrix is not Hermitian");
  }
  if (std::abs(rho.trace() - 1.0) > kTraceTol) {
    throw DomainError("density matrix trace differs from 1");
  }
  if (rho.min_eigenvalue() < -kPsdTol) {
    throw DomainError("density matrix is not positive semidefinite");
  }
  return rho;
}

double DensityMatrix::hermiticity_defect() const { return (m_ - m_.adjoint()).cwiseAbs().maxCoeff(); }

double DensityMatrix::min_eigenvalue() const {
  const Matrix4 h = 0.5 * (m_ + m_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double DensityMatrix::off_x_leakage() const {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const bool on_x = (i == j) || (i + j == 3);
      if (!on_x) worst = std::max(worst, std::abs(m_(i, j)));
    }
  }
  return worst;
}

DensityMatrix XState::to_density() const {
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = p1;
  m(1, 1) = p2;
  m(2, 2) = p3;
  m(3, 3) = p4;
  m(0, 3) = c14;
  m(3, 0) = std::conj(c14);
  m(1, 2) = c23;
  m(2, 1) = std::conj(c23);
  return DensityMatrix::unchecked(m);
}

bool is_valid(const XState& x, double tol) {
  if (std::abs(x.p1 + x.p2 + x.p3 + x.p4 - 1.0) > tol) return false;
  for (double p : x.populations()) {
    if (!(p >= -tol)) return false;
  }
  if (std::norm(x.c14) > x.p1 * x.p4 + tol) return false;
  if (std::norm(x.c23) > x.p2 * x.p3 + tol) return false;
  return true;
}

void require_valid(const XState& x) {
  if (!is_valid(x)) throw DomainError("invalid X state");
}

DensityMatrix make_product(ProductState which) {
  Matrix4 m = Matrix4::Zero();
  switch (which) {
    case ProductState::ee: m(basis::ee, basis::ee) = 1.0; break;
    case ProductState::eg: m(basis::eg, basis::eg) = 1.0; break;
    case ProductState::ge: m(basis::ge, basis::ge) = 1.0; break;
    case ProductState::gg: m(basis::gg, basis::gg) = 1.0; break;
  }
  return DensityMatrix::unchecked(m);
}

DensityMatrix make_bell(BellState which) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (which) {
    case BellState::PsiPlus: return DensityMatrix::unchecked(projector(ket(s, 0, 0, s)));
    case BellState::PsiMinus: return DensityMatrix::unchecked(projector(ket(s, 0, 0, -s)));
    case BellState::PhiPlus: return DensityMatrix::unchecked(projector(ket(0, s, s, 0)));
    case BellState::PhiMinus: return DensityMatrix::unchecked(projector(ket(0, s, -s, 0)));
  }
  throw DomainError("unknown Bell state");
}

DensityMatrix make_alpha_state(AlphaFamily which, double alpha) {
  require_unit_interval(alpha, "alpha");
  const double a = alpha;
  const double b = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
  switch (which) {
    case AlphaFamily::PhiAlphaPlus: return DensityMatrix::unchecked(projector(ket(0, a, b, 0)));
    case AlphaFamily::PsiAlphaPlus: return DensityMatrix::unchecked(projector(ket(a, 0, 0, b)));
    case AlphaFamily::PsiAlphaMinus: return DensityMatrix::unchecked(projector(ket(a, 0, 0, -b)));
  }
  throw DomainError("unknown alpha family");
}

DensityMatrix make_beta_state(double beta) {
  require_unit_interval(beta, "beta");
  XState x;
  x.p1 = x.p4 = beta / 2.0;
  x.p2 = x.p3 = (1.0 - beta) / 2.0;
  x.c14 = beta / 2.0;
  x.c23 = (1.0 - beta) / 2.0;
  return x.to_density();
}

DensityMatrix make_c_class(Sign sign, cplx c) {
  const double mag = std::abs(c);
  if (!(mag > 0.0) || mag > 1.0 / 3.0 + 1e-15) {
    throw DomainError("c-class coefficient must satisfy 0 < |c| <= 1/3");
  }
  XState x;
  x.p1 = x.p4 = 1.0 / 3.0;
  x.p2 = x.p3 = 1.0 / 6.0;
  x.c23 = sign == Sign::Plus ? 1.0 / 6.0 : -1.0 / 6.0;
  x.c14 = c;
  return x.to_density();
}

DensityMatrix make_werner(double epsilon) {
  if (!(epsilon >= -1.0 / 3.0 && epsilon <= 1.0)) {
    throw DomainError("Werner parameter must lie in [-1/3, 1]");
  }
  XState x;
  x.p1 = x.p4 = (1.0 - epsilon) / 4.0;
  x.p2 = x.p3 = (1.0 + epsilon) / 4.0;
  x.c23 = -epsilon / 2.0;
  return x.to_density();
}

XState as_x_state(const DensityMatrix& rho) {
  if (rho.off_x_leakage() > kOffXTol) {
    throw StructureError("density matrix is not X-shaped");
  }
  XState x;
  x.p1 = rho(0, 0).real();
  x.p2 = rho(1, 1).real();
  x.p3 = rho(2, 2).real();
  x.p4 = rho(3, 3).real();
  x.c14 = rho(0, 3);
  x.c23 = rho(1, 2);
  return x;
}

std::array<double, 4> x_eigenvalues(const XState& x) {
  const double mean14 = 0.5 * (x.p1 + x.p4);
  const double half14 = 0.5 * (x.p1 - x.p4);
  const double r14 = std::sqrt(half14 * half14 + std::norm(x.c14));
  const double mean23 = 0.5 * (x.p2 + x.p3);
  const double half23 = 0.5 * (x.p2 - x.p3);
  const double r23 = std::sqrt(half23 * half23 + std::norm(x.c23));
  std::array<double, 4> ev{mean14 + r14, mean14 - r14, mean23 + r23, mean23 - r23};
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

std::string to_string(ProductState s) {
  switch (s) {
    case ProductState::gg: return "gg";
    case ProductState::ee: return "ee";
    case ProductState::eg: return "eg";
    case ProductState::ge: return "ge";
  }
  return "?";
}

std::string to_string(BellState s) {
  switch (s) {
    case BellState::PsiPlus: return "psi_plus";
    case BellState::PsiMinus: return "psi_minus";
    case BellState::PhiPlus: return "phi_plus";
    case BellState::PhiMinus: return "phi_minus";
  }
  return "?";
}

std::string to_string(AlphaFamily f) {
  switch (f) {
    case AlphaFamily::PhiAlphaPlus: return "phi_alpha_plus";
    case AlphaFamily::PsiAlphaPlus: return "psi_alpha_plus";
    case AlphaFamily::PsiAlphaMinus: return "psi_alpha_minus";
  }
  return "?";
}

}  // namespace noisyqd
