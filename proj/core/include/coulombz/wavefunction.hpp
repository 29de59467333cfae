#pragma once

#include <utility>
#include <vector>

#include "coulombz/params.hpp"

namespace coulombz::wavefunction {

/// Closed-form description of one positive energy radial spinor
///
///   φ⁺(r) = A (λr)^η e^{−λr/2} L_n^ρ(λr),
///
/// with η = γ + 1, ρ = 2γ + 1 for γ > 0 and η = −γ, ρ = −2γ − 1 for γ < 0.
/// The Laguerre degree n pairs with the energy index n for γ < 0 and n + 1
/// for γ > 0. The rotation data needed for the lower component is cached.
struct SpinorShape {
  CouplingParams params;
  int n = 0;
  int energy_index = 0;
  double gamma = 0.0;
  double eta = 0.0;
  double rho = 0.0;
  double lambda = 0.0;
  double epsilon = 0.0;
  double c_plus = 1.0;
  double s_plus = 0.0;
  double norm = 1.0;
};

/// Radial samples of a spinor.
struct SampledSpinor {
  std::vector<double> r_grid;
  std::vector<double> phi_plus;
  std::vector<double> phi_minus;
};

/// Builds and normalizes the degree-n state. Throws DegenerateShapeError
/// for γ = 0, NotBoundStateError if λ ≤ 0 and KineticBalanceError if
/// ε + mC₊ = 0.
SpinorShape spinor_shape(const CouplingParams& p, int n);

/// Same shape with A = 1.
SpinorShape unnormalized_shape(const CouplingParams& p, int n);

double upper(const SpinorShape& s, double r);
double lower(const SpinorShape& s, double r);

/// d/dr φ⁺ using the analytic Laguerre derivative.
double upper_deriv(const SpinorShape& s, double r);

/// Convenience overloads; each call builds and normalizes the shape.
double upper(const CouplingParams& p, int n, double r);
double lower(const CouplingParams& p, int n, double r);

/// Positive-energy kinetic balance
///   φ⁻ = (ε + mC₊)⁻¹(−mS₊ + γ/r + d/dr)φ⁺
/// given φ⁺(r) and its derivative at r.
double kinetic_balance(const CouplingParams& p, double epsilon,
                       double phi_plus, double phi_plus_deriv, double r);

template <class F, class DF>
double kinetic_balance(const CouplingParams& p, double epsilon, F&& phi_plus,
                       DF&& phi_plus_deriv, double r) {
  return kinetic_balance(p, epsilon, phi_plus(r), phi_plus_deriv(r), r);
}

/// Normalization constant A with ∫(φ⁺² + φ⁻²)dr = 1, by quadrature.
double normalize(const CouplingParams& p, int n);
double normalize(const SpinorShape& unnormalized);

/// Closed-form A₀ of the γ < 0, n = 0 ground state:
/// √(λ₀/Γ(1 − 2γ))·[1 + ((mS₊ + λ₀/2)/Δε)²]^{−1/2}.
double ground_norm_analytic(const CouplingParams& p);

/// Ratio φ₀⁻/φ₀⁺ = −(mS₊ + λ₀/2)/Δε of the ground state.
double ground_lower_ratio(const CouplingParams& p);

/// Negative energy state: the positive energy state of negative_map(p)
/// with its components swapped. Its energy is −shape.epsilon.
SpinorShape negative_shape(const CouplingParams& p, int n);
std::pair<double, double> negative_spinor(const SpinorShape& mapped, double r);
std::pair<double, double> negative_spinor(const CouplingParams& p, int n,
                                          double r);

/// Geometric grid from lo to hi with npts points.
std::vector<double> geometric_grid(double lo, double hi, int npts);

/// Default sampling grid: 1e−3/λ to 40/λ, 2000 points.
std::vector<double> default_grid(const SpinorShape& s, int npts = 2000);

SampledSpinor sample(const SpinorShape& s, const std::vector<double>& r_grid);

}  // namespace coulombz::wavefunction
