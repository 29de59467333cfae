#include "coulombz/params.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "coulombz/errors.hpp"

namespace coulombz {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Rounding allowance for 1 + (αZ)²(2ξ − 1) ≥ 0; the product amplifies the
// rounding of 2ξ − 1 by (αZ)².
double radicand_slack(double alphaZ, double xi) {
  return 16.0 * kEps * (1.0 + alphaZ * alphaZ * (1.0 + std::abs(xi)));
}

}  // namespace

CouplingParams make_params(double m, double alpha, double Z, double xi,
                           int kappa) {
  if (!(m > 0.0)) throw DomainError("mass m must be positive");
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  if (!(Z > 0.0)) throw DomainError("nuclear charge Z must be positive");
  if (kappa == 0) throw DomainError("kappa must be a nonzero integer");
  if (!std::isfinite(xi)) throw DomainError("xi must be finite");

  const double aZ = alpha * Z;
  const double radicand = 1.0 + aZ * aZ * (2.0 * xi - 1.0);
  if (radicand < -radicand_slack(aZ, xi)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "non-Hermitian regime: Hermiticity bound 2*xi >= 1 - (alpha*Z)^-2 "
           "violated (xi = "
        << xi << ", alpha*Z = " << aZ << ", requires xi >= "
        << reality_bound(alpha, Z) << ")";
    throw NonHermitianError(msg.str());
  }
  return CouplingParams{m, alpha, Z, xi, kappa};
}

std::pair<double, double> couplings(const CouplingParams& p) {
  return {p.mu(), p.nu()};
}

double reality_bound(double alpha, double Z) {
  const double aZ = alpha * Z;
  return 0.5 - 0.5 / (aZ * aZ);
}

double no_transition_bound(double alpha, double Z) {
  return 1.0 - 1.0 / (alpha * Z);
}

double gamma_radicand(const CouplingParams& p) {
  const double ak = p.alpha / p.kappa;
  const double mu = p.mu();
  const double nu = p.nu();
  // μ² − ν² = (μ − ν)(μ + ν) = (2ξ − 1)Z², avoiding cancellation.
  const double radicand = 1.0 + ak * ak * (mu - nu) * (mu + nu);
  if (radicand < 0.0 && radicand >= -radicand_slack(p.alphaZ(), p.xi)) {
    return 0.0;
  }
  return radicand;
}

CouplingParams negative_map(const CouplingParams& p) {
  const double d = 2.0 * p.xi - 1.0;
  if (!(d > 0.0)) {
    throw DomainError(
        "negative_map requires xi > 1/2: the mapped charge (2*xi - 1)*Z "
        "would not be positive");
  }
  return make_params(p.m, p.alpha, d * p.Z, p.xi / d, -p.kappa);
}

}  // namespace coulombz
