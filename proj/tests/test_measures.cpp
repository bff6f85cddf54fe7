#include <cmath>
#include <random>

#include "doctest.h"
#include "optosteer/errors.hpp"
#include "optosteer/linalg.hpp"
#include "optosteer/measures.hpp"
#include "optosteer/model.hpp"

using namespace optosteer;

namespace {

TwoModeCovariance product_state(double variance) {
  return {Matrix::identity(2) * variance, Matrix::identity(2) * variance, Matrix::zeros(2, 2)};
}

TwoModeCovariance tmsv(double s) {
  const double c = std::cosh(2 * s) / 2, k = std::sinh(2 * s) / 2;
  return {Matrix::identity(2) * c, Matrix::identity(2) * c, Matrix::diagonal({k, -k})};
}

Matrix rotation(double phi) {
  return Matrix{{std::cos(phi), -std::sin(phi)}, {std::sin(phi), std::cos(phi)}};
}

// Steady state of the reference cavity at (r, nth).
TwoModeCovariance cavity_state(double r, double nth) {
  PhysicalParams p;
  p.r = r;
  p.nth1 = p.nth2 = nth;
  return mechanical_covariance(steady_covariance(p));
}

}  // namespace

TEST_CASE("vacuum product state") {
  const auto vac = product_state(0.5);
  CHECK(steering(vac, Direction::AtoB) == 0.0);
  CHECK(steering(vac, Direction::BtoA) == 0.0);
  CHECK(min_symplectic_pt(vac) == 0.5);
  CHECK(log_negativity(vac) == 0.0);
  CHECK(is_physical(vac));

  const auto rep = report(vac);
  CHECK(rep.g_ab == 0.0);
  CHECK(rep.g_ba == 0.0);
  CHECK(rep.e_n == 0.0);
  CHECK(rep.nu == 0.5);
  CHECK(rep.regime == Regime::NoWay);
}

TEST_CASE("thermal product states are neither steerable nor entangled") {
  for (double n : {0.1, 1.0, 5.0}) {
    const auto th = product_state((2 * n + 1) / 2);
    CHECK(steering(th, Direction::AtoB) == 0.0);
    CHECK(steering(th, Direction::BtoA) == 0.0);
    CHECK(min_symplectic_pt(th) == doctest::Approx((2 * n + 1) / 2).epsilon(1e-14));
    CHECK(log_negativity(th) == 0.0);
    CHECK(is_physical(th));
  }
}

TEST_CASE("sub-vacuum state is unphysical") {
  CHECK_FALSE(is_physical(product_state(0.25)));
  CHECK_FALSE(is_physical(product_state(0.0)));
}

TEST_CASE("two-mode squeezed vacuum closed forms") {
  for (double s : {0.5, 1.0, 2.0}) {
    const auto st = tmsv(s);
    CHECK(steering(st, Direction::AtoB) == doctest::Approx(std::log(std::cosh(2 * s))).epsilon(1e-9));
    CHECK(steering(st, Direction::BtoA) == doctest::Approx(std::log(std::cosh(2 * s))).epsilon(1e-9));
    CHECK(min_symplectic_pt(st) == doctest::Approx(std::exp(-2 * s) / 2).epsilon(1e-9));
    CHECK(log_negativity(st) == doctest::Approx(2 * s).epsilon(1e-9));
    CHECK(is_physical(st));
  }

  const auto rep = report(tmsv(1.0));
  CHECK(rep.g_ab == doctest::Approx(std::log(std::cosh(2.0))).epsilon(1e-9));
  CHECK(rep.g_ba == doctest::Approx(std::log(std::cosh(2.0))).epsilon(1e-9));
  CHECK(rep.e_n == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(rep.nu == doctest::Approx(std::exp(-2.0) / 2).epsilon(1e-9));
  CHECK(rep.regime == Regime::TwoWay);
}

TEST_CASE("degenerate inputs") {
  CHECK_THROWS_AS(steering(product_state(0.0), Direction::AtoB), DegenerateState);
  CHECK_THROWS_AS(min_symplectic_pt(product_state(0.0)), DegenerateState);
  CHECK_THROWS_AS(log_negativity(product_state(0.0)), DegenerateState);
  // det V_m < 0
  TwoModeCovariance bad{Matrix::identity(2), Matrix::identity(2), Matrix::identity(2) * 2.0};
  CHECK_THROWS_AS(report(bad), DegenerateState);
}

TEST_CASE("classify") {
  CHECK(classify(0.0, 0.0) == Regime::NoWay);
  CHECK(classify(0.3, 0.1) == Regime::TwoWay);
  CHECK(classify(0.0, 0.2) == Regime::OneWayBtoA);
  CHECK(classify(0.2, 0.0) == Regime::OneWayAtoB);
  CHECK(classify(kSteeringZero, kSteeringZero) == Regime::NoWay);
  CHECK(classify(2 * kSteeringZero, kSteeringZero) == Regime::OneWayAtoB);
  CHECK(to_string(Regime::OneWayBtoA) == "OneWayBtoA");
}

TEST_CASE("asymmetric Gaussian state: one-way steering") {
  // TMSV with loss on mode B: only the noisier mode A can steer.
  const double s = 0.6, eta = 0.3;
  const double c = std::cosh(2 * s) / 2, k = std::sinh(2 * s) / 2;
  const double vb = eta * c + (1 - eta) / 2;
  const double kb = std::sqrt(eta) * k;
  const TwoModeCovariance st{Matrix::identity(2) * c, Matrix::identity(2) * vb,
                             Matrix::diagonal({kb, -kb})};
  const auto rep = report(st);
  CHECK(rep.g_ab > 0.0);
  CHECK(rep.g_ba == 0.0);
  CHECK(rep.regime == Regime::OneWayAtoB);
  CHECK(rep.e_n > rep.g_ab);
  CHECK(report(st.swapped()).regime == Regime::OneWayBtoA);
}

TEST_CASE("block swap exchanges the steering directions") {
  for (double r : {1.0, 2.25, 3.0}) {
    for (double nth : {0.0, 2.0, 5.0}) {
      const auto vm = cavity_state(r, nth);
      const auto a = report(vm);
      const auto b = report(vm.swapped());
      CHECK(a.g_ab == b.g_ba);
      CHECK(a.g_ba == b.g_ab);
      CHECK(std::abs(a.e_n - b.e_n) <= 1e-12);
      CHECK(std::abs(a.nu - b.nu) <= 1e-12);
    }
  }
}

TEST_CASE("local rotations leave all measures invariant") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  for (double r : {1.5, 2.25, 3.0}) {
    const auto vm = cavity_state(r, 0.5);
    const auto ref = report(vm);
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix ra = rotation(angle(rng)), rb = rotation(angle(rng));
      const TwoModeCovariance rot{ra * vm.va * ra.transpose(), rb * vm.vb * rb.transpose(),
                                  ra * vm.vab * rb.transpose()};
      const auto rep = report(rot);
      CHECK(std::abs(rep.g_ab - ref.g_ab) <= 1e-9);
      CHECK(std::abs(rep.g_ba - ref.g_ba) <= 1e-9);
      CHECK(std::abs(rep.nu - ref.nu) <= 1e-9);
      CHECK(std::abs(rep.e_n - ref.e_n) <= 1e-9);
    }
  }
}

TEST_CASE("log_negativity: thermal sudden death at r = 1.5") {
  CHECK(log_negativity(cavity_state(1.5, 0.0)) > 0.0);
  // E_N is non-increasing in nth and vanishes for large enough nth.
  double prev = log_negativity(cavity_state(1.5, 0.0));
  double death = -1.0;
  for (double nth = 0.5; nth <= 40.0; nth += 0.5) {
    const double e = log_negativity(cavity_state(1.5, nth));
    CHECK(e <= prev + 1e-9);
    if (e == 0.0 && death < 0) death = nth;
    prev = e;
  }
  CHECK(death > 0.0);
  CHECK(log_negativity(cavity_state(1.5, 40.0)) == 0.0);
}

TEST_CASE("report invariants on cavity states") {
  for (double r = 0.0; r <= 3.5; r += 0.25) {
    for (double nth : {0.0, 1.0, 3.0, 5.0}) {
      const auto vm = cavity_state(r, nth);
      const auto rep = report(vm);
      CHECK(is_physical(vm));
      CHECK(rep.regime == classify(rep.g_ab, rep.g_ba));
      if (rep.g_ab > kSteeringZero || rep.g_ba > kSteeringZero) CHECK(rep.e_n > kSteeringZero);
      CHECK(std::max(rep.g_ab, rep.g_ba) <= rep.e_n + 1e-9);
      CHECK((rep.e_n > 0.0) == (rep.nu < 0.5));
    }
  }
}
