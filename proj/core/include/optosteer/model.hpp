#pragma once

#include <numbers>
#include <string>
#include <vector>

#include "optosteer/matrix.hpp"

namespace optosteer {

// Optomechanical ring cavity with two movable mirrors (modes A and B) driven
// on the red sideband and fed with single-mode squeezed light.
//
// All frequencies and rates are angular (rad/s). Both mirrors share omega_m.
struct PhysicalParams {
  double omega_m = 2 * std::numbers::pi * 947e3;
  double gamma1 = 2 * std::numbers::pi * 140.0;
  double gamma2 = 2 * std::numbers::pi * 140.0;
  double kappa = 2 * std::numbers::pi * 215e3;
  double omega_c = 2 * std::numbers::pi * 5.26e14;
  double omega_L = 2 * std::numbers::pi * 2.82e14;
  double power = 50e-3;   // W
  double m1 = 145e-12;    // kg
  double m2 = 145e-12;    // kg
  double l1 = 112e-6;     // m
  double l2 = 85e-6;      // m
  double theta1 = std::numbers::pi / 6;
  double theta2 = std::numbers::pi / 3;
  double r = 0.0;
  double nth1 = 5.0;
  double nth2 = 5.0;
  double delta = -2 * std::numbers::pi * 947e3;

  friend bool operator==(const PhysicalParams&, const PhysicalParams&) = default;
};

// Angle-weighted effective couplings, rad/s.
struct DerivedCouplings {
  double G1 = 0.0;
  double G2 = 0.0;
  double Geff1 = 0.0;
  double Geff2 = 0.0;
};

struct SqueezeMoments {
  double N = 0.0;
  double M = 0.0;
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;

  bool ok() const noexcept { return errors.empty(); }
};

inline constexpr double kHbar = 1.054571817e-34;       // J s
inline constexpr double kBoltzmann = 1.380649e-23;     // J / K

// Thresholds used by validate_params.
inline constexpr double kMinSidebandRatio = 3.0;       // omega_m / kappa
inline constexpr double kMinQualityFactor = 100.0;     // omega_m / gamma_j

ValidationReport validate_params(const PhysicalParams& params);

// Throws InvalidParams with the first validation error, if any.
void require_valid(const PhysicalParams& params);

/// Linearized optomechanical coupling G_j = g_j |<a>| of mirror j (1 or 2).
/// Scales as sqrt(power) / (l_j sqrt(m_j)).
double effective_coupling(const PhysicalParams& params, int j);

DerivedCouplings derived_couplings(const PhysicalParams& params);

/// Bose occupation (exp(hbar omega / kB T) - 1)^-1.
double thermal_occupancy(double omega_m, double temperature);

/// N = sinh^2 r, M = sinh r cosh r.
SqueezeMoments squeeze_moments(double r);

/// 6x6 drift matrix in the basis (q1, p1, q2, p2, x, y), rad/s.
Matrix drift_matrix(const PhysicalParams& params);

/// 6x6 diffusion matrix in the same basis, rad/s.
Matrix diffusion_matrix(const PhysicalParams& params);

/// Steady-state covariance of (A, D); both are divided by `rate_scale` before
/// solving, which leaves V unchanged. Throws NotHurwitz for unstable A.
Matrix steady_covariance(const Matrix& drift, const Matrix& diffusion, double rate_scale = 1.0);

/// Dimensionless 6x6 steady-state covariance (vacuum variance 1/2), solved on
/// rates normalized by omega_m.
Matrix steady_covariance(const PhysicalParams& params);

}  // namespace optosteer
