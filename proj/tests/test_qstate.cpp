#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "noisyqd/qstate.hpp"
#include "test_support.hpp"

using namespace noisyqd;
using noisyqd::testing::max_abs_diff;
using noisyqd::testing::random_x_state;

namespace {

void check_density_invariants(const DensityMatrix& rho) {
  CHECK(rho.hermiticity_defect() <= kHermitianTol);
  CHECK(std::abs(rho.trace() - 1.0) <= kTraceTol);
  CHECK(rho.min_eigenvalue() >= -kPsdTol);
}

std::array<double, 4> dense_spectrum(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix4> solver(rho.matrix(), Eigen::EigenvaluesOnly);
  std::array<double, 4> ev{};
  for (int i = 0; i < 4; ++i) ev[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

}  // namespace

TEST_CASE("product states are basis projectors") {
  const XState gg = as_x_state(make_product(ProductState::gg));
  CHECK(gg.p4 == 1.0);
  CHECK(gg.p1 + gg.p2 + gg.p3 == 0.0);
  CHECK(as_x_state(make_product(ProductState::ee)).p1 == 1.0);
  CHECK(as_x_state(make_product(ProductState::eg)).p2 == 1.0);
  CHECK(as_x_state(make_product(ProductState::ge)).p3 == 1.0);
}

TEST_CASE("Bell states") {
  const XState psi_plus = as_x_state(make_bell(BellState::PsiPlus));
  CHECK(psi_plus.p1 == doctest::Approx(0.5));
  CHECK(psi_plus.p4 == doctest::Approx(0.5));
  CHECK(psi_plus.c14.real() == doctest::Approx(0.5));

  const XState phi_minus = as_x_state(make_bell(BellState::PhiMinus));
  CHECK(phi_minus.p2 == doctest::Approx(0.5));
  CHECK(phi_minus.p3 == doctest::Approx(0.5));
  CHECK(phi_minus.c23.real() == doctest::Approx(-0.5));

  const XState phi_plus = as_x_state(make_bell(BellState::PhiPlus));
  CHECK(phi_plus.c23.real() == doctest::Approx(0.5));
  CHECK(std::abs(phi_plus.c14) == 0.0);
}

TEST_CASE("alpha states") {
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(max_abs_diff(make_alpha_state(AlphaFamily::PsiAlphaPlus, s).matrix(), make_bell(BellState::PsiPlus).matrix()) <
        1e-15);
  CHECK(max_abs_diff(make_alpha_state(AlphaFamily::PsiAlphaPlus, 0.0).matrix(),
                     make_product(ProductState::gg).matrix()) < 1e-15);
  CHECK(max_abs_diff(make_alpha_state(AlphaFamily::PhiAlphaPlus, 1.0).matrix(),
                     make_product(ProductState::eg).matrix()) < 1e-15);

  const XState x = as_x_state(make_alpha_state(AlphaFamily::PsiAlphaMinus, 0.6));
  CHECK(x.p1 == doctest::Approx(0.36));
  CHECK(x.c14.real() == doctest::Approx(-0.6 * 0.8));

  CHECK_THROWS_AS(make_alpha_state(AlphaFamily::PsiAlphaPlus, -0.1), DomainError);
  CHECK_THROWS_AS(make_alpha_state(AlphaFamily::PhiAlphaPlus, 1.01), DomainError);
}

TEST_CASE("beta states") {
  CHECK(max_abs_diff(make_beta_state(1.0).matrix(), make_bell(BellState::PsiPlus).matrix()) < 1e-15);
  CHECK(max_abs_diff(make_beta_state(0.0).matrix(), make_bell(BellState::PhiPlus).matrix()) < 1e-15);
  const XState half = as_x_state(make_beta_state(0.5));
  for (double p : half.populations()) CHECK(p == doctest::Approx(0.25));
  CHECK(half.c14.real() == doctest::Approx(0.25));
  CHECK(half.c23.real() == doctest::Approx(0.25));
  CHECK_THROWS_AS(make_beta_state(1.5), DomainError);
}

TEST_CASE("c-class states") {
  const XState boundary = as_x_state(make_c_class(Sign::Plus, 1.0 / 3.0));
  CHECK(std::norm(boundary.c14) == doctest::Approx(boundary.p1 * boundary.p4));
  CHECK(is_valid(boundary));

  // Dense eigensolver: spectrum {1/2, 1/3, 1/6, 0}. The |eg>,|ge> block is
  // rank one for every c, so the smallest eigenvalue is exactly zero.
  const DensityMatrix sixth = make_c_class(Sign::Plus, 1.0 / 6.0);
  const auto ev = dense_spectrum(sixth);
  CHECK(ev[0] == doctest::Approx(0.5));
  CHECK(ev[1] == doctest::Approx(1.0 / 3.0));
  CHECK(ev[2] == doctest::Approx(1.0 / 6.0));
  CHECK(std::abs(ev[3]) < 1e-12);
  check_density_invariants(sixth);

  const XState minus = as_x_state(make_c_class(Sign::Minus, cplx(0.1, -0.2)));
  CHECK(minus.c23.real() == doctest::Approx(-1.0 / 6.0));
  CHECK(minus.c14.imag() == doctest::Approx(-0.2));

  CHECK_THROWS_AS(make_c_class(Sign::Plus, 0.5), DomainError);
  CHECK_THROWS_AS(make_c_class(Sign::Plus, 0.0), DomainError);
}

TEST_CASE("Werner states") {
  CHECK(max_abs_diff(make_werner(1.0).matrix(), make_bell(BellState::PhiMinus).matrix()) < 1e-15);
  CHECK(max_abs_diff(make_werner(0.0).matrix(), Matrix4::Identity() / 4.0) < 1e-15);
  const XState third = as_x_state(make_werner(1.0 / 3.0));
  CHECK(third.p1 == doctest::Approx(1.0 / 6.0));
  CHECK(third.p4 == doctest::Approx(1.0 / 6.0));
  CHECK(third.p2 == doctest::Approx(1.0 / 3.0));
  CHECK(third.c23.real() == doctest::Approx(-1.0 / 6.0));
  CHECK_THROWS_AS(make_werner(-0.5), DomainError);
  CHECK_THROWS_AS(make_werner(1.1), DomainError);
}

TEST_CASE("every factory output is a valid density matrix") {
  check_density_invariants(make_product(ProductState::ge));
  for (auto b : {BellState::PsiPlus, BellState::PsiMinus, BellState::PhiPlus, BellState::PhiMinus}) {
    check_density_invariants(make_bell(b));
  }
  for (double a : {0.0, 0.169, 0.5, 0.986, 1.0}) {
    for (auto f : {AlphaFamily::PhiAlphaPlus, AlphaFamily::PsiAlphaPlus, AlphaFamily::PsiAlphaMinus}) {
      check_density_invariants(make_alpha_state(f, a));
    }
  }
  for (double b : {0.0, 0.3, 1.0}) check_density_invariants(make_beta_state(b));
  for (double e : {-1.0 / 3.0, 0.0, 0.7, 1.0}) check_density_invariants(make_werner(e));
  check_density_invariants(make_c_class(Sign::Minus, std::polar(1.0 / 3.0, 2.0)));
}

TEST_CASE("from_matrix rejects invalid matrices") {
  Matrix4 m = Matrix4::Identity() / 4.0;
  m(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(m), DomainError);  // not Hermitian
  CHECK_THROWS_AS(DensityMatrix::from_matrix(Matrix4::Identity() / 2.0), DomainError);
  Matrix4 neg = Matrix4::Zero();
  neg(0, 0) = 1.2;
  neg(1, 1) = -0.2;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(neg), DomainError);
  CHECK_NOTHROW(DensityMatrix::from_matrix(Matrix4::Identity() / 4.0));
}

TEST_CASE("as_x_state") {
  const XState bell = as_x_state(make_bell(BellState::PsiPlus));
  CHECK(bell.p2 == 0.0);
  CHECK(std::abs(bell.c23) == 0.0);

  const XState mixed = as_x_state(DensityMatrix::from_matrix(Matrix4::Identity() / 4.0));
  for (double p : mixed.populations()) CHECK(p == 0.25);

  Matrix4 m = Matrix4::Identity() / 4.0;
  m(0, 1) = 0.1;
  m(1, 0) = 0.1;
  CHECK_THROWS_AS(as_x_state(DensityMatrix::from_matrix(m)), StructureError);
}

TEST_CASE("x_eigenvalues examples") {
  const auto bell = x_eigenvalues(as_x_state(make_bell(BellState::PhiMinus)));
  CHECK(bell[0] == doctest::Approx(1.0));
  for (int i = 1; i < 4; ++i) CHECK(std::abs(bell[static_cast<std::size_t>(i)]) < 1e-15);

  const auto mixed = x_eigenvalues(as_x_state(make_werner(0.0)));
  for (double l : mixed) CHECK(l == doctest::Approx(0.25));

  // Frozen from a dense eigensolver: {1/2, 1/6, 1/6, 1/6}.
  const auto werner = x_eigenvalues(as_x_state(make_werner(1.0 / 3.0)));
  CHECK(werner[0] == doctest::Approx(0.5));
  for (int i = 1; i < 4; ++i) CHECK(werner[static_cast<std::size_t>(i)] == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("property: X-state embedding round trip and spectrum vs dense solver") {
  std::mt19937_64 rng(20240611);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const XState x = random_x_state(rng);
    REQUIRE(is_valid(x));
    const XState back = as_x_state(x.to_density());
    CHECK(back.p1 == x.p1);
    CHECK(back.p2 == x.p2);
    CHECK(back.p3 == x.p3);
    CHECK(back.p4 == x.p4);
    CHECK(back.c14 == x.c14);
    CHECK(back.c23 == x.c23);

    const auto fast = x_eigenvalues(x);
    const auto dense = dense_spectrum(x.to_density());
    double sum = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      worst = std::max(worst, std::abs(fast[i] - dense[i]));
      sum += fast[i];
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("property: alpha and sqrt(1 - alpha^2) share a spectrum") {
  for (int i = 0; i <= 50; ++i) {
    const double a = i / 50.0;
    const auto s1 = x_eigenvalues(as_x_state(make_alpha_state(AlphaFamily::PsiAlphaPlus, a)));
    const auto s2 =
        x_eigenvalues(as_x_state(make_alpha_state(AlphaFamily::PsiAlphaPlus, std::sqrt(1.0 - a * a))));
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(s1[k] - s2[k]) < 1e-12);
  }
}
