#include <algorithm>
#include <cmath>
#include <limits>

#include "coulombz/errors.hpp"
#include "coulombz/spectrum.hpp"
#include "coulombz/verify.hpp"

namespace coulombz::verify {

double scan_stability(double alphaZ_max, int steps, StabilityBounds bounds) {
  if (!(alphaZ_max > 0.0)) throw DomainError("alphaZ_max must be positive");
  if (steps < 2) throw DomainError("stability scan needs at least 2 steps");

  const double alpha = kAlphaDefault;
  const double start = std::min(0.1, alphaZ_max / 10.0);
  const double log_span = std::log(alphaZ_max / start);
  double lowest = std::numeric_limits<double>::infinity();
  for (int i = 0; i < steps; ++i) {
    const double aZ = i + 1 == steps
                          ? alphaZ_max
                          : start * std::exp(log_span * i / (steps - 1));
    const double Z = aZ / alpha;
    auto visit = [&](double bound) {
      const double xi = std::max(bound, 0.0);
      const CouplingParams p = make_params(1.0, alpha, Z, xi, -1);
      lowest = std::min(lowest, spectrum::ground_energy(p));
    };
    if (bounds != StabilityBounds::no_transition) {
      visit(reality_bound(alpha, Z));
    }
    if (bounds != StabilityBounds::reality) {
      visit(no_transition_bound(alpha, Z));
    }
  }
  return lowest;
}

}  // namespace coulombz::verify
