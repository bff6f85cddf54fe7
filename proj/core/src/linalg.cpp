#include "optosteer/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "optosteer/errors.hpp"

namespace optosteer {

namespace {

using ext = long double;

// LU factorization with partial pivoting, in place, extended precision.
struct LuFactors {
  std::size_t n;
  std::vector<ext> lu;
  std::vector<std::size_t> perm;
  int sign = 1;
  bool singular = false;
};

LuFactors factorize(const Matrix& a, ext pivot_floor) {
  const std::size_t n = a.rows();
  LuFactors f{n, std::vector<ext>(a.data().begin(), a.data().end()), {}, 1, false};
  f.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;
  auto at = [&](std::size_t i, std::size_t j) -> ext& { return f.lu[i * n + j]; };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    ext best = std::abs(at(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(at(i, k)) > best) {
        best = std::abs(at(i, k));
        p = i;
      }
    }
    if (best <= pivot_floor) {
      f.singular = true;
      return f;
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      std::swap(f.perm[k], f.perm[p]);
      f.sign = -f.sign;
    }
    const ext pivot = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const ext l = at(i, k) / pivot;
      at(i, k) = l;
      if (l == 0) continue;
      for (std::size_t j = k + 1; j < n; ++j) at(i, j) -= l * at(k, j);
    }
  }
  return f;
}

std::vector<ext> substitute(const LuFactors& f, const std::vector<ext>& b) {
  const std::size_t n = f.n;
  std::vector<ext> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    ext s = b[f.perm[i]];
    for (std::size_t j = 0; j < i; ++j) s -= f.lu[i * n + j] * x[j];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    ext s = x[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= f.lu[i * n + j] * x[j];
    x[i] = s / f.lu[i * n + i];
  }
  return x;
}

void require_square(const Matrix& m, const char* op) {
  if (!m.is_square()) throw std::invalid_argument(std::string(op) + ": matrix must be square");
}

void require_finite(const Matrix& m, const char* op) {
  if (!m.all_finite()) throw NonFinite(std::string(op) + ": non-finite matrix entry");
}

}  // namespace

std::vector<double> lu_solve(const Matrix& a, std::span<const double> b) {
  require_square(a, "lu_solve");
  require_finite(a, "lu_solve");
  if (b.size() != a.rows()) throw std::invalid_argument("lu_solve: rhs length mismatch");

  const auto f = factorize(a, static_cast<ext>(kPivotFloor) * a.max_abs());
  if (f.singular) throw SingularMatrix("lu_solve: pivot below floor");

  const std::size_t n = a.rows();
  const std::vector<ext> rhs(b.begin(), b.end());
  std::vector<ext> x = substitute(f, rhs);

  // One round of iterative refinement against the original entries.
  std::vector<ext> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    ext s = rhs[i];
    for (std::size_t j = 0; j < n; ++j) s -= static_cast<ext>(a(i, j)) * x[j];
    r[i] = s;
  }
  const auto dx = substitute(f, r);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<double>(x[i] + dx[i]);
  return out;
}

long double determinant_ext(const Matrix& m) {
  require_square(m, "determinant");
  require_finite(m, "determinant");
  const auto f = factorize(m, 0);
  if (f.singular) return 0;
  ext det = f.sign;
  for (std::size_t i = 0; i < f.n; ++i) det *= f.lu[i * f.n + i];
  return det;
}

double determinant(const Matrix& m) { return static_cast<double>(determinant_ext(m)); }

std::vector<double> char_poly(const Matrix& m) {
  require_square(m, "char_poly");
  const std::size_t n = m.rows();
  if (n > 6) throw std::invalid_argument("char_poly: dimension above 6");

  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  std::vector<ext> a(m.data().begin(), m.data().end());
  std::vector<ext> mk(n * n, 0), amk(n * n, 0);
  std::vector<ext> c(n + 1, 0);
  c[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    // mk <- A * mk + c[n-k+1] I
    std::vector<ext> next(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t j = 0; j < n; ++j) next[i * n + j] += a[i * n + l] * mk[l * n + j];
    for (std::size_t i = 0; i < n; ++i) next[i * n + i] += c[n - k + 1];
    mk = std::move(next);

    ext tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a[i * n + l] * mk[l * n + i];
    c[n - k] = -tr / static_cast<ext>(k);
  }
  return {c.begin(), c.end()};
}

bool is_hurwitz(const Matrix& m) {
  const auto c = char_poly(m);
  const std::size_t n = c.size() - 1;
  if (n == 0) return true;

  // A singular matrix has a zero root.
  if (!(c[0] > 0.0)) return false;

  // Substitute lambda = s mu with s = |c_0|^(1/n), the geometric mean root
  // modulus. Root signs are unchanged, and a small but well-separated decay
  // rate no longer sits below the relative marginal threshold.
  const double s = std::pow(c[0], 1.0 / static_cast<double>(n));
  std::vector<double> balanced(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    balanced[k] = c[k] * std::pow(s, static_cast<double>(k) - static_cast<double>(n));
  }
  double scale = 0.0;
  for (double x : balanced) scale = std::max(scale, std::abs(x));
  const double marginal = kRouthMarginal * scale;

  // Routh array, coefficients in descending powers.
  const std::size_t width = n / 2 + 1;
  std::vector<double> upper(width, 0.0), lower(width, 0.0);
  for (std::size_t i = 0; i <= n; ++i) {
    (i % 2 == 0 ? upper : lower)[i / 2] = balanced[n - i];
  }

  // c[n] = 1, so every leading entry must be positive.
  if (upper[0] < marginal) return false;
  for (std::size_t row = 1; row <= n; ++row) {
    if (!(lower[0] >= marginal)) return false;
    std::vector<double> next(width, 0.0);
    for (std::size_t j = 0; j + 1 < width; ++j) {
      next[j] = (lower[0] * upper[j + 1] - upper[0] * lower[j + 1]) / lower[0];
    }
    upper = std::move(lower);
    lower = std::move(next);
  }
  return true;
}

}  // namespace optosteer
