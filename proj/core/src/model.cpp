#include "optosteer/model.hpp"

#include <cmath>
#include <fmt/format.h>

#include "optosteer/errors.hpp"
#include "optosteer/linalg.hpp"

namespace optosteer {

namespace {

void require_positive(ValidationReport& rep, const char* name, double value) {
  if (!std::isfinite(value) || !(value > 0.0)) {
    rep.errors.push_back(fmt::format("{} must be positive and finite (got {})", name, value));
  }
}

void require_non_negative(ValidationReport& rep, const char* name, double value) {
  if (!std::isfinite(value) || !(value >= 0.0)) {
    rep.errors.push_back(fmt::format("{} must be non-negative and finite (got {})", name, value));
  }
}

void require_angle(ValidationReport& rep, const char* name, double value) {
  if (!std::isfinite(value) || value < 0.0 || value >= std::numbers::pi) {
    rep.errors.push_back(fmt::format("{} must lie in [0, pi) (got {})", name, value));
  }
}

double cos2_half(double theta) {
  const double c = std::cos(theta / 2);
  return c * c;
}

}  // namespace

ValidationReport validate_params(const PhysicalParams& p) {
  ValidationReport rep;
  require_positive(rep, "omega_m", p.omega_m);
  require_positive(rep, "gamma1", p.gamma1);
  require_positive(rep, "gamma2", p.gamma2);
  require_positive(rep, "kappa", p.kappa);
  require_positive(rep, "omega_c", p.omega_c);
  require_positive(rep, "omega_L", p.omega_L);
  require_non_negative(rep, "power", p.power);
  require_positive(rep, "m1", p.m1);
  require_positive(rep, "m2", p.m2);
  require_positive(rep, "l1", p.l1);
  require_positive(rep, "l2", p.l2);
  require_angle(rep, "theta1", p.theta1);
  require_angle(rep, "theta2", p.theta2);
  require_non_negative(rep, "r", p.r);
  require_non_negative(rep, "nth1", p.nth1);
  require_non_negative(rep, "nth2", p.nth2);
  if (!std::isfinite(p.delta)) rep.errors.push_back("delta must be finite");
  if (!rep.ok()) return rep;

  if (p.omega_m / p.kappa < kMinSidebandRatio) {
    rep.warnings.push_back(fmt::format(
        "omega_m/kappa = {:.3g} < {}: resolved-sideband rotating-wave approximation is marginal",
        p.omega_m / p.kappa, kMinSidebandRatio));
  }
  for (int j = 1; j <= 2; ++j) {
    const double q = p.omega_m / (j == 1 ? p.gamma1 : p.gamma2);
    if (q < kMinQualityFactor) {
      rep.warnings.push_back(fmt::format(
          "Q{} = {:.3g} < {}: Markovian Brownian noise model is marginal", j, q, kMinQualityFactor));
    }
  }
  if (std::abs(p.delta + p.omega_m) > 1e-12 * p.omega_m) {
    rep.warnings.push_back(
        "delta != -omega_m: drift structure assumes red-sideband driving; delta only enters the coupling");
  }
  return rep;
}

void require_valid(const PhysicalParams& params) {
  const auto rep = validate_params(params);
  if (!rep.ok()) throw InvalidParams(rep.errors.front());
}

double effective_coupling(const PhysicalParams& p, int j) {
  if (j != 1 && j != 2) throw std::invalid_argument("effective_coupling: mode index must be 1 or 2");
  require_valid(p);
  const double l = j == 1 ? p.l1 : p.l2;
  const double m = j == 1 ? p.m1 : p.m2;
  const double num = p.omega_c * p.omega_c * p.kappa * p.power;
  const double den =
      l * l * m * p.omega_m * p.omega_L * (p.kappa * p.kappa / 4 + p.delta * p.delta);
  return std::sqrt(num / den);
}

DerivedCouplings derived_couplings(const PhysicalParams& p) {
  DerivedCouplings c;
  c.G1 = effective_coupling(p, 1);
  c.G2 = effective_coupling(p, 2);
  c.Geff1 = c.G1 * cos2_half(p.theta1);
  c.Geff2 = c.G2 * cos2_half(p.theta2);
  return c;
}

double thermal_occupancy(double omega_m, double temperature) {
  if (!(temperature > 0.0)) throw InvalidParams("thermal_occupancy: temperature must be positive");
  if (!(omega_m > 0.0)) throw InvalidParams("thermal_occupancy: omega_m must be positive");
  const double x = kHbar * omega_m / (kBoltzmann * temperature);
  return 1.0 / std::expm1(x);
}

SqueezeMoments squeeze_moments(double r) {
  if (!(r >= 0.0)) throw InvalidParams("squeeze_moments: r must be non-negative");
  const double s = std::sinh(r);
  return {s * s, s * std::cosh(r)};
}

Matrix drift_matrix(const PhysicalParams& p) {
  const auto c = derived_couplings(p);
  Matrix a = Matrix::diagonal(
      {-p.gamma1 / 2, -p.gamma1 / 2, -p.gamma2 / 2, -p.gamma2 / 2, -p.kappa / 2, -p.kappa / 2});
  for (std::size_t k = 0; k < 2; ++k) {
    const std::size_t opt = 4 + k;
    a(0 + k, opt) = c.Geff1;
    a(2 + k, opt) = -c.Geff2;
    a(opt, 0 + k) = -c.Geff1;
    a(opt, 2 + k) = c.Geff2;
  }
  return a;
}

Matrix diffusion_matrix(const PhysicalParams& p) {
  require_valid(p);
  const double d1 = p.gamma1 / 2 * (2 * p.nth1 + 1);
  const double d2 = p.gamma2 / 2 * (2 * p.nth2 + 1);
  return Matrix::diagonal(
      {d1, d1, d2, d2, p.kappa / 2 * std::exp(2 * p.r), p.kappa / 2 * std::exp(-2 * p.r)});
}

Matrix steady_covariance(const Matrix& drift, const Matrix& diffusion, double rate_scale) {
  if (!(rate_scale > 0.0)) throw std::invalid_argument("steady_covariance: rate_scale must be positive");
  const double inv = 1.0 / rate_scale;
  return solve_lyapunov(drift * inv, diffusion * inv);
}

Matrix steady_covariance(const PhysicalParams& p) {
  return steady_covariance(drift_matrix(p), diffusion_matrix(p), p.omega_m);
}

}  // namespace optosteer
