#pragma once

#include <utility>

namespace coulombz {

/// Fine structure constant used as the default, exactly 1/137.
inline constexpr double kAlphaDefault = 1.0 / 137.0;

/// Physical inputs of the mixed vector / pseudo Coulomb problem.
///
/// Natural units (ħ = c = 1). Energies are reported in units of `m` and
/// lengths in units of 1/m. The mixing parameter `xi` splits the charge
/// into a pseudo part μ = ξZ and a vector part ν = (1 − ξ)Z.
///
/// Instances are only produced by make_params() and are immutable values.
struct CouplingParams {
  double m = 1.0;
  double alpha = kAlphaDefault;
  double Z = 1.0;
  double xi = 0.0;
  int kappa = -1;

  double alphaZ() const { return alpha * Z; }
  double mu() const { return xi * Z; }
  double nu() const { return Z - mu(); }

  friend bool operator==(const CouplingParams&, const CouplingParams&) = default;
};

/// Validates the inputs and returns the parameter set.
///
/// Throws DomainError for m ≤ 0, α ≤ 0, Z ≤ 0 or κ = 0 and
/// NonHermitianError when 2ξ < 1 − (αZ)⁻². The bound itself is accepted.
CouplingParams make_params(double m, double alpha, double Z, double xi,
                           int kappa);

/// Derived couplings (μ, ν) with μ + ν = Z.
std::pair<double, double> couplings(const CouplingParams& p);

/// Smallest ξ for which the spectrum is real: ½ − ½(αZ)⁻².
double reality_bound(double alpha, double Z);

/// Smallest ξ for which positive and negative energy states cannot mix:
/// 1 − (αZ)⁻¹.
double no_transition_bound(double alpha, double Z);

/// Radicand 1 + (α/κ)²(μ² − ν²) of γ, with round-off at the Hermiticity
/// boundary clamped to zero.
double gamma_radicand(const CouplingParams& p);

/// Parameters of the negative energy problem: ν → −ν, μ → μ, κ → −κ.
///
/// In terms of the inputs Z' = (2ξ − 1)Z and ξ' = ξ/(2ξ − 1). Requires
/// ξ > ½, otherwise Z' would not be positive (DomainError).
CouplingParams negative_map(const CouplingParams& p);

}  // namespace coulombz
