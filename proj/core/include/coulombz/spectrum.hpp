#pragma once

#include "coulombz/params.hpp"

namespace coulombz::spectrum {

enum class EnergySign { positive, negative };

/// A bound-state label together with its energy in units of m.
struct EnergyLevel {
  int n = 0;
  EnergySign energy_sign = EnergySign::positive;
  int gamma_sign = -1;
  double epsilon = 0.0;
};

/// Dirac-Coulomb energy ±m[1 + (αZ/(n + √(κ² − α²Z²)))²]^{-1/2}.
/// Throws NonHermitianError for αZ > |κ|.
double sommerfeld_energy(double alpha, double Z, int kappa, int n,
                         EnergySign sign, double m = 1.0);

/// Energy of the mixed problem.
///
/// The two signs are the two roots of
///   ε²(1 + q_ν²) + 2q_ν q_μ mε + m²(q_μ² − 1) = 0,
/// with q_ν = αν/(n + |γ|) and q_μ = αμ/(n + |γ|). At ξ = 0 this is the
/// Sommerfeld formula.
double energy(const CouplingParams& p, int n, EnergySign sign);

EnergyLevel level(const CouplingParams& p, int n, EnergySign sign);

/// Lowest positive energy, ε₀ = m[ξ² + (κ/αZ)²]⁻¹[ξ(ξ − 1) +
/// (κ/αZ)²√(1 + (αZ/κ)²(2ξ − 1))], which equals mC₋. Only κ² enters.
double ground_energy(const CouplingParams& p);

/// Δε = m(C₊ + C₋) = (2mγ/κ)/(1 + (αξZ/κ)²).
double energy_gap(const CouplingParams& p);

/// ±m[1 − ½(αZ/(n + |γ|))²].
double second_order_energy(const CouplingParams& p, int n, EnergySign sign);

/// λ_n = 2αZ/(n + |γ|)·[ε_n(1 − ξ) + mξ] with ε_n the positive root.
/// Throws NotBoundStateError when λ_n ≤ 0.
double lambda_scale(const CouplingParams& p, int n);

/// Parameters of the Schrödinger-Coulomb problem equivalent to a level.
struct NonrelMap {
  double Z_eff = 0.0;
  double E = 0.0;
  double ell = 0.0;
};

/// Z_eff = (ε/m)ν + μ, E = (ε² − m²)/2m and ℓ = γ (γ > 0) or −γ − 1
/// (γ < 0). For the negative sign the same expressions are evaluated on the
/// mirrored couplings ν → −ν, γ → −γ, ε → −ε.
NonrelMap nonrel_map(const CouplingParams& p, double epsilon, EnergySign sign);

/// E = −mZ²α²/2(n + ℓ + 1)²; ℓ may be fractional.
double nonrel_energy(double m, double alpha, double Z, double ell, int n);

}  // namespace coulombz::spectrum
