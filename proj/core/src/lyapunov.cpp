#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "optosteer/errors.hpp"
#include "optosteer/linalg.hpp"

namespace optosteer {

namespace {

void check_pair(const Matrix& a, const Matrix& d, const char* op) {
  if (!a.is_square() || !d.is_square() || a.rows() != d.rows()) {
    throw std::invalid_argument(std::string(op) + ": A and D must be square and of equal size");
  }
  if (a.rows() > 6) throw std::invalid_argument(std::string(op) + ": dimension above 6");
  if (!a.all_finite() || !d.all_finite()) {
    throw NonFinite(std::string(op) + ": non-finite input");
  }
}

}  // namespace

Matrix solve_lyapunov(const Matrix& a, const Matrix& d) {
  check_pair(a, d, "solve_lyapunov");
  const double sym_tol = 1e-12 * (1.0 + d.max_abs());
  if (max_abs_diff(d, d.transpose()) > sym_tol) {
    throw std::invalid_argument("solve_lyapunov: D is not symmetric");
  }
  if (!is_hurwitz(a)) throw NotHurwitz("solve_lyapunov: drift matrix is not Hurwitz");

  const std::size_t n = a.rows();
  const Matrix eye = Matrix::identity(n);
  // Row-major vec: vec(A V) = (A (x) I) vec(V), vec(V A^T) = (I (x) A) vec(V).
  const Matrix k = kron(a, eye) + kron(eye, a);

  std::vector<double> rhs(d.data().begin(), d.data().end());
  for (double& x : rhs) x = -x;
  const auto x = lu_solve(k, rhs);

  Matrix v(n, n, x);
  Matrix sym = (v + v.transpose()) * 0.5;
  return sym;
}

double lyapunov_residual(const Matrix& a, const Matrix& v, const Matrix& d) {
  return (a * v + v * a.transpose() + d).frobenius_norm();
}

double default_ode_step(const Matrix& a) {
  const double m = a.max_abs();
  if (m == 0.0) throw std::invalid_argument("default_ode_step: zero drift matrix");
  return 0.01 / m;
}

namespace {

using ext = long double;

// Affine map v -> v + lin * v + shift on vec(V), n2 = n*n entries.
struct AffineStep {
  std::size_t n2;
  std::vector<ext> lin;
  std::vector<ext> shift;
};

// (outer o inner)(v) = v + (Lo + Li + Lo Li) v + (so + si + Lo si)
AffineStep compose(const AffineStep& outer, const AffineStep& inner) {
  const std::size_t n2 = outer.n2;
  AffineStep out{n2, std::vector<ext>(n2 * n2), std::vector<ext>(n2)};
  for (std::size_t i = 0; i < n2; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      out.lin[i * n2 + j] = outer.lin[i * n2 + j] + inner.lin[i * n2 + j];
    }
    for (std::size_t k = 0; k < n2; ++k) {
      const ext lik = outer.lin[i * n2 + k];
      if (lik == 0) continue;
      for (std::size_t j = 0; j < n2; ++j) out.lin[i * n2 + j] += lik * inner.lin[k * n2 + j];
    }
    ext s = outer.shift[i] + inner.shift[i];
    for (std::size_t k = 0; k < n2; ++k) s += outer.lin[i * n2 + k] * inner.shift[k];
    out.shift[i] = s;
  }
  return out;
}

// Lyapunov vector field on an n x n matrix stored row-major.
class LyapunovField {
 public:
  LyapunovField(const Matrix& a, const Matrix& d)
      : n_(a.rows()), a_(a.data().begin(), a.data().end()), d_(d.data().begin(), d.data().end()) {}

  std::vector<ext> operator()(const std::vector<ext>& v, bool with_noise) const {
    std::vector<ext> out(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        ext s = with_noise ? d_[i * n_ + j] : 0;
        for (std::size_t k = 0; k < n_; ++k) {
          s += a_[i * n_ + k] * v[k * n_ + j] + v[i * n_ + k] * a_[j * n_ + k];
        }
        out[i * n_ + j] = s;
      }
    return out;
  }

  // V(t+h) - V(t) for one classical RK4 step.
  std::vector<ext> rk4_increment(const std::vector<ext>& v, ext h, bool with_noise) const {
    const std::size_t n2 = v.size();
    auto axpy = [&](const std::vector<ext>& x, ext s, const std::vector<ext>& y) {
      std::vector<ext> r(n2);
      for (std::size_t i = 0; i < n2; ++i) r[i] = x[i] + s * y[i];
      return r;
    };
    const auto k1 = (*this)(v, with_noise);
    const auto k2 = (*this)(axpy(v, h / 2, k1), with_noise);
    const auto k3 = (*this)(axpy(v, h / 2, k2), with_noise);
    const auto k4 = (*this)(axpy(v, h, k3), with_noise);
    std::vector<ext> inc(n2);
    for (std::size_t i = 0; i < n2; ++i) inc[i] = h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    return inc;
  }

 private:
  std::size_t n_;
  std::vector<ext> a_;
  std::vector<ext> d_;
};

}  // namespace

Matrix integrate_lyapunov_ode(const Matrix& a, const Matrix& d, double t_final, double dt) {
  check_pair(a, d, "integrate_lyapunov_ode");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("integrate_lyapunov_ode: dt must be positive");
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
    throw std::invalid_argument("integrate_lyapunov_ode: t_final must be non-negative");
  }

  const std::size_t n = a.rows();
  const std::size_t n2 = n * n;
  const double raw_steps = std::ceil(t_final / dt);
  if (raw_steps > 1e18) throw std::invalid_argument("integrate_lyapunov_ode: too many steps");
  auto steps = static_cast<unsigned long long>(raw_steps);
  if (steps == 0) return Matrix(n, n);
  const ext h = static_cast<ext>(t_final) / static_cast<ext>(steps);

  // The RK4 step is affine in V; recover it by probing with basis matrices.
  const LyapunovField field(a, d);
  AffineStep step{n2, std::vector<ext>(n2 * n2), field.rk4_increment(std::vector<ext>(n2, 0), h, true)};
  for (std::size_t col = 0; col < n2; ++col) {
    std::vector<ext> basis(n2, 0);
    basis[col] = 1;
    const auto inc = field.rk4_increment(basis, h, false);
    for (std::size_t row = 0; row < n2; ++row) step.lin[row * n2 + col] = inc[row];
  }

  AffineStep total{n2, std::vector<ext>(n2 * n2, 0), std::vector<ext>(n2, 0)};
  while (steps > 0) {
    if (steps & 1ULL) total = compose(step, total);
    steps >>= 1;
    if (steps > 0) step = compose(step, step);
    const bool finite = std::all_of(step.lin.begin(), step.lin.end(), [](ext x) { return std::isfinite(x); });
    if (!finite) throw NonFinite("integrate_lyapunov_ode: integration diverged");
  }

  std::vector<double> out(n2);
  for (std::size_t i = 0; i < n2; ++i) {
    out[i] = static_cast<double>(total.shift[i]);
    if (!std::isfinite(out[i])) throw NonFinite("integrate_lyapunov_ode: integration diverged");
  }
  return Matrix(n, n, out);
}

}  // namespace optosteer
