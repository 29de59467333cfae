#include "coulombz/spectrum.hpp"

#include <cmath>

#include "coulombz/errors.hpp"
#include "coulombz/rotation.hpp"

namespace coulombz::spectrum {

namespace {

double sign_factor(EnergySign sign) {
  return sign == EnergySign::positive ? 1.0 : -1.0;
}

void check_level(int n) {
  if (n < 0) throw DomainError("radial quantum number n must be >= 0");
}

}  // namespace

double sommerfeld_energy(double alpha, double Z, int kappa, int n,
                         EnergySign sign, double m) {
  check_level(n);
  if (kappa == 0) throw DomainError("kappa must be a nonzero integer");
  const double x = alpha * Z;
  const double k2 = static_cast<double>(kappa) * kappa;
  if (x * x > k2) {
    throw NonHermitianError(
        "non-Hermitian regime: Sommerfeld formula requires alpha*Z <= |kappa|");
  }
  // ±m[1 + (x/N)²]^{-1/2} written as ±mN/√(N² + x²) so that N = 0 is exact.
  const double N = n + std::sqrt(k2 - x * x);
  return sign_factor(sign) * m * N / std::sqrt(N * N + x * x);
}

double energy(const CouplingParams& p, int n, EnergySign sign) {
  check_level(n);
  const double x = p.alphaZ();
  const double xi = p.xi;
  const double N = n + std::abs(gamma(p));
  // Roots of the quadratic, multiplied through by N² so that the n = 0,
  // γ = 0 limit stays finite.
  const double disc = N * N + x * x * (1.0 - 2.0 * xi);
  if (disc < 0.0) {
    throw NonHermitianError("non-Hermitian regime: complex energy");
  }
  const double den = N * N + x * x * (1.0 - xi) * (1.0 - xi);
  const double num =
      x * x * xi * (xi - 1.0) + sign_factor(sign) * N * std::sqrt(disc);
  return p.m * num / den;
}

EnergyLevel level(const CouplingParams& p, int n, EnergySign sign) {
  return EnergyLevel{n, sign, p.kappa > 0 ? 1 : -1, energy(p, n, sign)};
}

double ground_energy(const CouplingParams& p) {
  const double xi = p.xi;
  const double kx = p.kappa / p.alphaZ();
  const double k2 = kx * kx;
  const double radicand = gamma_radicand(p);
  if (radicand < 0.0) {
    throw NonHermitianError("non-Hermitian regime: complex energy");
  }
  return p.m * (xi * (xi - 1.0) + k2 * std::sqrt(radicand)) / (xi * xi + k2);
}

double energy_gap(const CouplingParams& p) {
  const double k = p.kappa;
  const double t = p.alpha * p.xi * p.Z / k;
  return (2.0 * p.m * gamma(p) / k) / (1.0 + t * t);
}

double second_order_energy(const CouplingParams& p, int n, EnergySign sign) {
  check_level(n);
  const double q = p.alphaZ() / (n + std::abs(gamma(p)));
  return sign_factor(sign) * p.m * (1.0 - 0.5 * q * q);
}

double lambda_scale(const CouplingParams& p, int n) {
  check_level(n);
  const double N = n + std::abs(gamma(p));
  if (N == 0.0) {
    throw DegenerateShapeError("lambda undefined for n = 0 at gamma = 0");
  }
  const double eps = energy(p, n, EnergySign::positive);
  const double lambda =
      2.0 * p.alphaZ() / N * (eps * (1.0 - p.xi) + p.m * p.xi);
  if (!(lambda > 0.0)) {
    throw NotBoundStateError("not a bound state: lambda <= 0");
  }
  return lambda;
}

NonrelMap nonrel_map(const CouplingParams& p, double epsilon,
                     EnergySign sign) {
  double g = gamma(p);
  double nu = p.nu();
  double eps = epsilon;
  if (sign == EnergySign::negative) {
    g = -g;
    nu = -nu;
    eps = -eps;
  }
  NonrelMap out;
  out.Z_eff = eps / p.m * nu + p.mu();
  out.E = (epsilon * epsilon - p.m * p.m) / (2.0 * p.m);
  out.ell = g > 0.0 ? g : -g - 1.0;
  return out;
}

double nonrel_energy(double m, double alpha, double Z, double ell, int n) {
  check_level(n);
  if (!(ell > -1.0)) throw DomainError("ell must exceed -1");
  const double d = n + ell + 1.0;
  return -m * Z * Z * alpha * alpha / (2.0 * d * d);
}

}  // namespace coulombz::spectrum
