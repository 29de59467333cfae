#pragma once

#include <functional>

namespace coulombz::specfun {

/// Associated Laguerre polynomial L_n^ρ(x) by upward recurrence.
/// Requires n ≥ 0, ρ > −1 and x ≥ 0 (DomainError otherwise).
double laguerre(int n, double rho, double x);

/// d/dx L_n^ρ(x) = −L_{n−1}^{ρ+1}(x).
double laguerre_deriv(int n, double rho, double x);

/// Γ(x) for x > 0 (Lanczos, g = 7).
double gamma_fn(double x);

inline constexpr double kDefaultQuadTol = 1e-10;

/// ∫₀^∞ f(r) dr for integrands that decay at least exponentially.
///
/// Adaptive Gauss-Kronrod (7/15) on t ∈ [0, 1) with r = s·t/(1 − t), where
/// `scale` = s should be of the order of the integrand's width. The error
/// is controlled relative to ∫|f|, so oscillating integrands with a
/// vanishing result still converge. Throws QuadratureError on
/// non-convergence.
double integrate_semi_infinite(const std::function<double(double)>& f,
                               double tol = kDefaultQuadTol,
                               double scale = 1.0);

}  // namespace coulombz::specfun
