#pragma once

#include <stdexcept>
#include <string>

namespace coulombz {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input outside the domain of an operation (κ = 0, Z ≤ 0, r ≤ 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Parameters for which the Hamiltonian (or the Sommerfeld formula) is not
/// real.
class NonHermitianError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// γ = 0: the wavefunction exponents are undefined.
class DegenerateShapeError : public Error {
 public:
  using Error::Error;
};

/// The spectral scale λ is not positive, so no normalizable state exists.
class NotBoundStateError : public Error {
 public:
  using Error::Error;
};

/// ε + mC₊ = 0, where the kinetic balance relation breaks down.
class KineticBalanceError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : Error(what), achieved_(achieved) {}
  /// Relative error estimate reached before giving up.
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

/// Shooting bracket does not enclose the requested eigenvalue.
class BracketError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace coulombz
