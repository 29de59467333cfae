#include "coulombz/rotation.hpp"

#include <cmath>

#include "coulombz/errors.hpp"

namespace coulombz {

double gamma(int kappa, double alpha, double mu, double nu) {
  const double ak = alpha / kappa;
  double radicand = 1.0 + ak * ak * (mu - nu) * (mu + nu);
  if (radicand < 0.0) {
    if (radicand > -1e-12) {
      radicand = 0.0;
    } else {
      throw NonHermitianError("non-Hermitian regime: gamma is complex");
    }
  }
  return kappa * std::sqrt(radicand);
}

double gamma(const CouplingParams& p) {
  const double radicand = gamma_radicand(p);
  if (radicand < 0.0) {
    throw NonHermitianError("non-Hermitian regime: gamma is complex");
  }
  return p.kappa * std::sqrt(radicand);
}

bool is_degenerate(const CouplingParams& p) { return gamma_radicand(p) == 0.0; }

namespace {

// Solves μC − (κ/α)S = ±ν together with κC + αμS = γ.
Rotation solve_rotation(int kappa, double alpha, double mu, double nu,
                        double g) {
  const double k = kappa;
  const double denom = k * k + alpha * alpha * mu * mu;
  Rotation rot;
  rot.gamma = g;
  rot.c_plus = (k * g + alpha * alpha * mu * nu) / denom;
  rot.c_minus = (k * g - alpha * alpha * mu * nu) / denom;
  rot.s_plus = (alpha * mu * g - alpha * k * nu) / denom;
  rot.s_minus = (alpha * mu * g + alpha * k * nu) / denom;
  rot.theta_plus = std::atan2(rot.s_plus, rot.c_plus);
  rot.theta_minus = std::atan2(rot.s_minus, rot.c_minus);
  return rot;
}

}  // namespace

Rotation rotation(int kappa, double alpha, double mu, double nu) {
  if (kappa == 0) throw DomainError("kappa must be a nonzero integer");
  return solve_rotation(kappa, alpha, mu, nu, gamma(kappa, alpha, mu, nu));
}

Rotation rotation(const CouplingParams& p) {
  return solve_rotation(p.kappa, p.alpha, p.mu(), p.nu(), gamma(p));
}

Matrix2 rotation_matrix(double theta) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  return {{{c, s}, {-s, c}}};
}

Matrix2 vector_coulomb_matrix(const CouplingParams& p, double r) {
  if (!(r > 0.0)) throw DomainError("radius must be positive");
  const double v = -p.alpha * p.Z / r;
  return {{{v, 0.0}, {0.0, v}}};
}

Matrix2 pseudo_coulomb_matrix(const CouplingParams& p, double r) {
  if (!(r > 0.0)) throw DomainError("radius must be positive");
  return {{{0.0, 0.0}, {0.0, 2.0 * p.alpha * p.mu() / r}}};
}

Matrix2 potential_matrix(const CouplingParams& p, double r) {
  return vector_coulomb_matrix(p, r) + pseudo_coulomb_matrix(p, r);
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  Matrix2 out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    }
  }
  return out;
}

Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
  Matrix2 out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out[i][j] = a[i][j] + b[i][j];
  }
  return out;
}

}  // namespace coulombz
