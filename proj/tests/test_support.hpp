#pragma once

// Test-only helpers: random generators and a symmetric eigenvalue oracle that
// is independent of the library's LU / characteristic-polynomial code paths.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "optosteer/matrix.hpp"

namespace optosteer::testing {

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                            double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Matrix m(rows, cols);
  for (double& x : m.data()) x = dist(rng);
  return m;
}

// A = K - (P P^T + 0.1 I) with K skew: A + A^T is negative definite.
inline Matrix random_hurwitz(std::mt19937_64& rng, std::size_t n) {
  const Matrix k0 = random_matrix(rng, n, n);
  const Matrix skew = (k0 - k0.transpose()) * 0.5;
  const Matrix p = random_matrix(rng, n, n);
  return skew - (p * p.transpose() + Matrix::identity(n) * 0.1);
}

inline Matrix random_psd(std::mt19937_64& rng, std::size_t n) {
  const Matrix q = random_matrix(rng, n, n);
  return q * q.transpose();
}

// Cyclic Jacobi eigenvalues of a symmetric matrix, ascending.
inline std::vector<double> symmetric_eigenvalues(Matrix a) {
  const std::size_t n = a.rows();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (off < 1e-30 * (1.0 + a.frobenius_norm())) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

// Symplectic eigenvalues of a positive-definite covariance in (q1,p1,q2,p2,...)
// ordering. With W = Omega^T V Omega, V W has eigenvalues nu_k^2 (each twice);
// with V = L L^T these are the eigenvalues of the symmetric L^T W L.
inline std::vector<double> symplectic_eigenvalues(const Matrix& v) {
  const std::size_t n = v.rows();
  Matrix omega(n, n);
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    omega(k, k + 1) = 1.0;
    omega(k + 1, k) = -1.0;
  }
  const Matrix w = omega.transpose() * v * omega;
  Matrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = v(j, j);
    for (std::size_t k = 0; k < j; ++k) s -= l(j, k) * l(j, k);
    l(j, j) = std::sqrt(std::max(s, 0.0));
    for (std::size_t i = j + 1; i < n; ++i) {
      double t = v(i, j);
      for (std::size_t k = 0; k < j; ++k) t -= l(i, k) * l(j, k);
      l(i, j) = l(j, j) > 0 ? t / l(j, j) : 0.0;
    }
  }
  const auto mu = symmetric_eigenvalues(l.transpose() * w * l);
  std::vector<double> nu;
  for (std::size_t k = 0; k < n; k += 2) nu.push_back(std::sqrt(std::max(mu[k], 0.0)));
  return nu;
}

}  // namespace optosteer::testing
