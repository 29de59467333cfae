#pragma once

#include <array>

#include "coulombz/params.hpp"

namespace coulombz {

using Matrix2 = std::array<std::array<double, 2>, 2>;

/// Angle data of the rotation e^{iθσ₂/2} that removes the r⁻¹ term from
/// one diagonal entry of the radial Dirac operator.
///
/// The plus branch satisfies μC₊ − (κ/α)S₊ = +ν, the minus branch
/// μC₋ − (κ/α)S₋ = −ν. Both share κC + αμS = γ.
struct Rotation {
  double theta_plus = 0.0;
  double theta_minus = 0.0;
  double c_plus = 1.0;
  double c_minus = 1.0;
  double s_plus = 0.0;
  double s_minus = 0.0;
  double gamma = 0.0;
};

/// γ = κ√(1 + (α/κ)²(μ² − ν²)), carrying the sign of κ. Returns 0 when the
/// radicand vanishes (see is_degenerate()).
double gamma(const CouplingParams& p);
double gamma(int kappa, double alpha, double mu, double nu);

/// True when γ = 0, i.e. ξ sits exactly on the Hermiticity bound for |κ| = 1.
bool is_degenerate(const CouplingParams& p);

Rotation rotation(const CouplingParams& p);
Rotation rotation(int kappa, double alpha, double mu, double nu);

/// U(θ) = [[cos θ/2, sin θ/2], [−sin θ/2, cos θ/2]].
Matrix2 rotation_matrix(double theta);

/// Diagonal potential of the unrotated radial equation at radius r:
/// diag(−αZ/r, −αZ/r + 2αμ/r). Throws DomainError for r ≤ 0.
Matrix2 potential_matrix(const CouplingParams& p, double r);

/// The vector Coulomb part diag(−αZ/r, −αZ/r) of potential_matrix().
Matrix2 vector_coulomb_matrix(const CouplingParams& p, double r);

/// The pseudo Coulomb part diag(0, 2αμ/r) of potential_matrix().
Matrix2 pseudo_coulomb_matrix(const CouplingParams& p, double r);

Matrix2 operator*(const Matrix2& a, const Matrix2& b);
Matrix2 operator+(const Matrix2& a, const Matrix2& b);

}  // namespace coulombz
