#pragma once

#include <span>
#include <vector>

#include "optosteer/matrix.hpp"

namespace optosteer {

// Relative pivot floor: a pivot below kPivotFloor * max|A| is singular.
inline constexpr double kPivotFloor = 1e-14;

// Routh leading entries below kRouthMarginal * max|coefficient| are marginal.
inline constexpr double kRouthMarginal = 1e-12;

/// Solves A x = b by LU with partial pivoting.
///
/// Factorization and substitution run in extended precision; the result
/// satisfies ||Ax - b||_inf <= 1e-10 (1 + ||b||_inf) for any system that
/// passes the pivot floor. Throws SingularMatrix otherwise.
std::vector<double> lu_solve(const Matrix& a, std::span<const double> b);

/// Determinant via LU with pivot-sign tracking. Singular input gives 0.
double determinant(const Matrix& m);

/// determinant() without the final rounding to double.
long double determinant_ext(const Matrix& m);

/// Coefficients c_0..c_n of det(lambda I - M), lowest order first, by the
/// Faddeev-LeVerrier recursion. Requires n <= 6.
std::vector<double> char_poly(const Matrix& m);

/// True iff every eigenvalue of M has strictly negative real part, decided by
/// the Routh array of char_poly(M). Marginal cases return false. n <= 6.
///
/// The polynomial is first rescaled to unit geometric-mean root modulus; a
/// Routh leading entry below kRouthMarginal times the largest rescaled
/// coefficient counts as marginal.
bool is_hurwitz(const Matrix& m);

/// Steady-state solution of A V + V A^T = -D.
///
/// Solves the vectorized system (A (x) I + I (x) A) vec(V) = -vec(D) and
/// symmetrizes the result. Throws NotHurwitz when A is not stable and
/// SingularMatrix when the Kronecker sum is numerically singular.
Matrix solve_lyapunov(const Matrix& a, const Matrix& d);

/// ||A V + V A^T + D||_F.
double lyapunov_residual(const Matrix& a, const Matrix& v, const Matrix& d);

/// Default RK4 step for integrate_lyapunov_ode: 0.01 / max|A|.
double default_ode_step(const Matrix& a);

/// Integrates dV/dt = A V + V A^T + D from V(0) = 0 to t_final with
/// classical fixed-step RK4 (step <= dt, landing exactly on t_final).
///
/// The step map is affine in V, so N steps are evaluated by binary powering
/// of the one-step propagator instead of N sequential updates; in exact
/// arithmetic the result is identical. Throws NonFinite on divergence.
Matrix integrate_lyapunov_ode(const Matrix& a, const Matrix& d, double t_final, double dt);

}  // namespace optosteer
