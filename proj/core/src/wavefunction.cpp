#include "coulombz/wavefunction.hpp"

#include <cmath>

#include "coulombz/errors.hpp"
#include "coulombz/rotation.hpp"
#include "coulombz/specfun.hpp"
#include "coulombz/spectrum.hpp"

namespace coulombz::wavefunction {

using spectrum::EnergySign;

namespace {

// Beyond this value of λr the exponential factor underflows to zero.
constexpr double kUnderflowArg = 1400.0;

// (λr)^a e^{−λr/2}, evaluated in log form so that neither factor
// overflows on its own.
double envelope(double x, double a) {
  if (x <= 0.0) return a == 0.0 ? 1.0 : 0.0;
  return std::exp(a * std::log(x) - 0.5 * x);
}

double kinetic_denominator(const SpinorShape& s) {
  return s.epsilon + s.params.m * s.c_plus;
}

}  // namespace

SpinorShape unnormalized_shape(const CouplingParams& p, int n) {
  if (n < 0) throw DomainError("Laguerre degree n must be >= 0");
  const Rotation rot = rotation(p);
  if (rot.gamma == 0.0) {
    throw DegenerateShapeError(
        "degenerate shape: gamma = 0, exponents eta and rho are undefined");
  }

  SpinorShape s;
  s.params = p;
  s.n = n;
  s.gamma = rot.gamma;
  s.c_plus = rot.c_plus;
  s.s_plus = rot.s_plus;
  if (rot.gamma > 0.0) {
    s.energy_index = n + 1;
    s.eta = rot.gamma + 1.0;
    s.rho = 2.0 * rot.gamma + 1.0;
  } else {
    s.energy_index = n;
    s.eta = -rot.gamma;
    s.rho = -2.0 * rot.gamma - 1.0;
  }
  s.epsilon = spectrum::energy(p, s.energy_index, EnergySign::positive);
  s.lambda = spectrum::lambda_scale(p, s.energy_index);
  if (std::abs(kinetic_denominator(s)) <= 1e-14 * p.m) {
    throw KineticBalanceError(
        "kinetic balance singular: epsilon = -m*C+ for this state");
  }
  s.norm = 1.0;
  return s;
}

double normalize(const SpinorShape& unnormalized) {
  SpinorShape s = unnormalized;
  s.norm = 1.0;
  const double width = (2.0 * s.eta + 2.0 * s.n + 1.0) / s.lambda;
  const double integral = specfun::integrate_semi_infinite(
      [&](double r) {
        const double a = upper(s, r);
        const double b = lower(s, r);
        return a * a + b * b;
      },
      specfun::kDefaultQuadTol, width);
  return 1.0 / std::sqrt(integral);
}

double normalize(const CouplingParams& p, int n) {
  return normalize(unnormalized_shape(p, n));
}

SpinorShape spinor_shape(const CouplingParams& p, int n) {
  SpinorShape s = unnormalized_shape(p, n);
  s.norm = normalize(s);
  return s;
}

double upper(const SpinorShape& s, double r) {
  if (r < 0.0) throw DomainError("radius must be non-negative");
  const double x = s.lambda * r;
  if (x > kUnderflowArg) return 0.0;
  return s.norm * envelope(x, s.eta) * specfun::laguerre(s.n, s.rho, x);
}

double upper_deriv(const SpinorShape& s, double r) {
  if (!(r > 0.0)) throw DomainError("radius must be positive");
  const double x = s.lambda * r;
  if (x > kUnderflowArg) return 0.0;
  const double L = specfun::laguerre(s.n, s.rho, x);
  const double dL = specfun::laguerre_deriv(s.n, s.rho, x);
  return s.lambda * s.norm * envelope(x, s.eta - 1.0) *
         (s.eta * L - 0.5 * x * L + x * dL);
}

double lower(const SpinorShape& s, double r) {
  if (r < 0.0) throw DomainError("radius must be non-negative");
  const double x = s.lambda * r;
  if (x > kUnderflowArg) return 0.0;
  const double m = s.params.m;
  const double g = s.gamma;
  const double pref = s.lambda * s.norm / kinetic_denominator(s);
  if (g > 0.0) {
    const double a = (s.n + 2.0 * g + 1.0) * specfun::laguerre(s.n, 2.0 * g, x);
    const double b = (m * s.s_plus / s.lambda + 0.5) * x *
                     specfun::laguerre(s.n, 2.0 * g + 1.0, x);
    return pref * envelope(x, g) * (a - b);
  }
  const double a = specfun::laguerre(s.n, -2.0 * g, x);
  const double b = (m * s.s_plus / s.lambda - 0.5) *
                   specfun::laguerre(s.n, -2.0 * g - 1.0, x);
  return -pref * envelope(x, -g) * (a + b);
}

double upper(const CouplingParams& p, int n, double r) {
  return upper(spinor_shape(p, n), r);
}

double lower(const CouplingParams& p, int n, double r) {
  return lower(spinor_shape(p, n), r);
}

double kinetic_balance(const CouplingParams& p, double epsilon,
                       double phi_plus, double phi_plus_deriv, double r) {
  if (!(r > 0.0)) throw DomainError("radius must be positive");
  const Rotation rot = rotation(p);
  const double den = epsilon + p.m * rot.c_plus;
  if (std::abs(den) <= 1e-14 * p.m) {
    throw KineticBalanceError(
        "kinetic balance singular: epsilon = -m*C+ (relation not valid)");
  }
  return ((-p.m * rot.s_plus + rot.gamma / r) * phi_plus + phi_plus_deriv) /
         den;
}

double ground_lower_ratio(const CouplingParams& p) {
  const Rotation rot = rotation(p);
  if (!(rot.gamma < 0.0)) {
    throw DomainError("ground state formulas need gamma < 0 (kappa < 0)");
  }
  const double lambda0 = spectrum::lambda_scale(p, 0);
  return -(p.m * rot.s_plus + 0.5 * lambda0) / spectrum::energy_gap(p);
}

double ground_norm_analytic(const CouplingParams& p) {
  const double ratio = ground_lower_ratio(p);
  const double lambda0 = spectrum::lambda_scale(p, 0);
  const double g = gamma(p);
  return std::sqrt(lambda0 / specfun::gamma_fn(1.0 - 2.0 * g)) /
         std::sqrt(1.0 + ratio * ratio);
}

SpinorShape negative_shape(const CouplingParams& p, int n) {
  return spinor_shape(negative_map(p), n);
}

std::pair<double, double> negative_spinor(const SpinorShape& mapped,
                                          double r) {
  return {lower(mapped, r), upper(mapped, r)};
}

std::pair<double, double> negative_spinor(const CouplingParams& p, int n,
                                          double r) {
  return negative_spinor(negative_shape(p, n), r);
}

std::vector<double> geometric_grid(double lo, double hi, int npts) {
  if (!(lo > 0.0) || !(hi > lo) || npts < 2) {
    throw DomainError("geometric grid needs 0 < lo < hi and npts >= 2");
  }
  std::vector<double> grid(static_cast<std::size_t>(npts));
  const double ratio = std::log(hi / lo) / (npts - 1);
  for (int i = 0; i < npts; ++i) grid[i] = lo * std::exp(ratio * i);
  grid.back() = hi;
  return grid;
}

std::vector<double> default_grid(const SpinorShape& s, int npts) {
  return geometric_grid(1e-3 / s.lambda, 40.0 / s.lambda, npts);
}

SampledSpinor sample(const SpinorShape& s, const std::vector<double>& r_grid) {
  SampledSpinor out;
  out.r_grid = r_grid;
  out.phi_plus.reserve(r_grid.size());
  out.phi_minus.reserve(r_grid.size());
  for (double r : r_grid) {
    out.phi_plus.push_back(upper(s, r));
    out.phi_minus.push_back(lower(s, r));
  }
  return out;
}

}  // namespace coulombz::wavefunction
