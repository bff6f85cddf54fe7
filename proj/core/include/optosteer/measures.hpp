#pragma once

#include <string_view>

#include "optosteer/matrix.hpp"

namespace optosteer {

// Two-mode covariance of the mirrors, V_m = [[va, vab], [vab^T, vb]].
struct TwoModeCovariance {
  Matrix va = Matrix::zeros(2, 2);
  Matrix vb = Matrix::zeros(2, 2);
  Matrix vab = Matrix::zeros(2, 2);

  Matrix assembled() const;

  // Same state with the roles of A and B exchanged.
  TwoModeCovariance swapped() const;
};

enum class Direction { AtoB, BtoA };

enum class Regime { NoWay, OneWayAtoB, OneWayBtoA, TwoWay };

std::string_view to_string(Regime regime);

struct SteeringReport {
  double g_ab = 0.0;
  double g_ba = 0.0;
  double e_n = 0.0;
  double nu = 0.5;
  Regime regime = Regime::NoWay;
};

// Numerical zero for regime classification.
inline constexpr double kSteeringZero = 1e-9;

/// Leading 4x4 block of a 6x6 covariance (optical mode traced out).
TwoModeCovariance mechanical_covariance(const Matrix& v);

/// Gaussian steering max(0, 1/2 ln(det V_steerer / (4 det V_m))).
/// Throws DegenerateState when det V_m <= 0.
double steering(const TwoModeCovariance& vm, Direction direction);

/// Smallest symplectic eigenvalue of the partially transposed V_m.
double min_symplectic_pt(const TwoModeCovariance& vm);

/// max(0, -ln 2 nu).
double log_negativity(const TwoModeCovariance& vm);

/// Both symplectic eigenvalues of V_m are >= 1/2 - 1e-9.
bool is_physical(const TwoModeCovariance& vm);

Regime classify(double g_ab, double g_ba);

SteeringReport report(const TwoModeCovariance& vm);

}  // namespace optosteer
