#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "coulombz/params.hpp"
#include "coulombz/spectrum.hpp"

namespace coulombz::verify {

struct ResidualReport {
  std::vector<double> grid;
  double residual_norm = 0.0;
  double worst_r = 0.0;
};

struct ShootingResult {
  double epsilon = 0.0;
  int node_count = 0;
  int iterations = 0;
  std::pair<double, double> bracket;
};

using RadialFn = std::function<double(double)>;
using SpinorFn = std::function<std::pair<double, double>(double)>;

inline constexpr double kDefaultRelativeStep = 1e-3;

/// Finite-difference residual of the Schrödinger-like equation
///
///   [−d²/dr² + γ(γ ± 1)/r² − 2α(εν + mμ)/r − (ε² − m²)]φ = 0,
///
/// upper sign for the positive branch (φ = φ⁺), lower sign for the
/// negative branch (φ = φ⁻). φ″ uses a 5-point stencil with step
/// `rel_step`·r. The norm is max|residual| over the grid divided by the
/// largest sum of absolute term magnitudes. Needs at least 7 grid points.
ResidualReport residual_second_order(
    const CouplingParams& p, double epsilon, const RadialFn& phi,
    const std::vector<double>& r_grid,
    spectrum::EnergySign branch = spectrum::EnergySign::positive,
    double rel_step = kDefaultRelativeStep);

/// Residual of both rows of the rotated first-order system, with C, S
/// from the plus (positive branch) or minus (negative branch) rotation.
ResidualReport residual_first_order(
    const CouplingParams& p, double epsilon, const SpinorFn& spinor,
    const std::vector<double>& r_grid,
    spectrum::EnergySign branch = spectrum::EnergySign::positive,
    double rel_step = kDefaultRelativeStep);

/// Finds the positive-branch eigenvalue whose upper component has `nodes`
/// interior zeros, by integrating the second-order equation outward from
/// the r^η behaviour at the origin and bisecting on the node count at the
/// far boundary, followed by one Ridders step.
///
/// The bracket must satisfy N(lo) ≤ nodes < N(hi), where N counts zeros
/// out to the far boundary (BracketError otherwise). For γ < 0 the state
/// with n nodes has energy index n; for γ > 0 it is n + 1.
ShootingResult shoot_eigenvalue(const CouplingParams& p, int nodes,
                                std::pair<double, double> bracket);

/// Bracket covering every positive-branch level: from the middle of the
/// gap, m(C₋ − C₊)/2, up to m(1 − 1e−4). The second-order equation is also
/// solved by the negative-branch energies (all ≤ −mC₊), so node counting is
/// only monotone above the gap.
std::pair<double, double> positive_branch_bracket(const CouplingParams& p);

enum class StabilityBounds { both, reality, no_transition };

/// Minimum of ε₀/m over a log-uniform αZ scan from min(0.1, αZ_max/10) to
/// αZ_max, with ξ set to max(bound, 0) for the selected bounds and κ = −1.
double scan_stability(double alphaZ_max, int steps,
                      StabilityBounds bounds = StabilityBounds::both);

}  // namespace coulombz::verify
