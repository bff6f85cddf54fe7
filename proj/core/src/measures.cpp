#include "optosteer/measures.hpp"

#include <algorithm>
#include <cmath>

#include "optosteer/errors.hpp"
#include "optosteer/linalg.hpp"

namespace optosteer {

namespace {

using ext = long double;

ext det2(const Matrix& m) {
  const ext a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  return a * d - b * c;
}

// Averaged over both mode orderings so that exchanging A and B is exact.
ext symmetric_det(const TwoModeCovariance& vm) {
  return (determinant_ext(vm.assembled()) + determinant_ext(vm.swapped().assembled())) / 2;
}

ext checked_det(const TwoModeCovariance& vm) {
  const ext det = symmetric_det(vm);
  if (!(det > 0)) throw DegenerateState("det V_m must be positive");
  return det;
}

// Smaller root of x^2 - sum x + det (squared symplectic eigenvalue), written
// without the cancelling subtraction.
ext smaller_root(ext sum, ext det) {
  ext disc = sum * sum - 4 * det;
  if (disc < 0) disc = 0;
  return 2 * det / (sum + std::sqrt(disc));
}

}  // namespace

Matrix TwoModeCovariance::assembled() const {
  Matrix m(4, 4);
  m.set_block(0, 0, va);
  m.set_block(0, 2, vab);
  m.set_block(2, 0, vab.transpose());
  m.set_block(2, 2, vb);
  return m;
}

TwoModeCovariance TwoModeCovariance::swapped() const {
  return {vb, va, vab.transpose()};
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::NoWay: return "NoWay";
    case Regime::OneWayAtoB: return "OneWayAtoB";
    case Regime::OneWayBtoA: return "OneWayBtoA";
    case Regime::TwoWay: return "TwoWay";
  }
  return "Unknown";
}

TwoModeCovariance mechanical_covariance(const Matrix& v) {
  if (v.rows() != 6 || v.cols() != 6) {
    throw std::invalid_argument("mechanical_covariance: expected a 6x6 covariance");
  }
  return {v.block(0, 0, 2, 2), v.block(2, 2, 2, 2), v.block(0, 2, 2, 2)};
}

double steering(const TwoModeCovariance& vm, Direction direction) {
  const ext det_m = checked_det(vm);
  const ext det_local = det2(direction == Direction::AtoB ? vm.va : vm.vb);
  const double g = static_cast<double>(0.5L * std::log(det_local / (4 * det_m)));
  return g > 0.0 ? g : 0.0;
}

double min_symplectic_pt(const TwoModeCovariance& vm) {
  const ext det_m = checked_det(vm);
  const ext sigma = det2(vm.va) + det2(vm.vb) - 2 * det2(vm.vab);
  if (sigma < -1e-12L) throw DegenerateState("partial-transpose invariant is negative");
  if (sigma * sigma - 4 * det_m < -1e-12L) {
    throw DegenerateState("partial-transpose discriminant is negative");
  }
  return static_cast<double>(std::sqrt(smaller_root(sigma, det_m)));
}

double log_negativity(const TwoModeCovariance& vm) {
  const double e = -std::log(2.0 * min_symplectic_pt(vm));
  return e > 0.0 ? e : 0.0;
}

bool is_physical(const TwoModeCovariance& vm) {
  const ext det_m = symmetric_det(vm);
  if (!(det_m > 0)) return false;
  const ext delta = det2(vm.va) + det2(vm.vb) + 2 * det2(vm.vab);
  if (!(delta > 0)) return false;
  return std::sqrt(smaller_root(delta, det_m)) >= 0.5L - 1e-9L;
}

Regime classify(double g_ab, double g_ba) {
  const bool ab = g_ab > kSteeringZero;
  const bool ba = g_ba > kSteeringZero;
  if (ab && ba) return Regime::TwoWay;
  if (ab) return Regime::OneWayAtoB;
  if (ba) return Regime::OneWayBtoA;
  return Regime::NoWay;
}

SteeringReport report(const TwoModeCovariance& vm) {
  SteeringReport rep;
  rep.g_ab = steering(vm, Direction::AtoB);
  rep.g_ba = steering(vm, Direction::BtoA);
  rep.nu = min_symplectic_pt(vm);
  rep.e_n = std::max(0.0, -std::log(2.0 * rep.nu));
  rep.regime = classify(rep.g_ab, rep.g_ba);
  return rep;
}

}  // namespace optosteer
