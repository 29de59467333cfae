#include <cmath>

#include "coulombz/errors.hpp"
#include "coulombz/specfun.hpp"

namespace coulombz::specfun {

double laguerre(int n, double rho, double x) {
  if (n < 0) throw DomainError("Laguerre degree must be >= 0");
  if (!(rho > -1.0)) {
    throw DomainError("Laguerre order rho must exceed -1 (non-normalizable)");
  }
  if (!(x >= 0.0)) throw DomainError("Laguerre argument must be >= 0");

  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + rho - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + rho - x) * cur - (k + rho) * prev) /
                        (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre_deriv(int n, double rho, double x) {
  if (n < 0) throw DomainError("Laguerre degree must be >= 0");
  if (!(rho > -1.0)) {
    throw DomainError("Laguerre order rho must exceed -1 (non-normalizable)");
  }
  if (n == 0) return 0.0;
  return -laguerre(n - 1, rho + 1.0, x);
}

}  // namespace coulombz::specfun
