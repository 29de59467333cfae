#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "coulombz/errors.hpp"
#include "coulombz/specfun.hpp"

namespace coulombz::specfun {

namespace {

// 15-point Kronrod abscissae (positive half) and weights, with the
// embedded 7-point Gauss weights at the odd Kronrod nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

constexpr int kInitialPieces = 16;
constexpr int kMaxIntervals = 8000;

struct Piece {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double abs_value = 0.0;
  double error = 0.0;
  bool operator<(const Piece& o) const { return error < o.error; }
};

template <class G>
Piece gauss_kronrod(const G& g, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = g(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_sum = std::abs(fc) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = g(center - dx);
    const double f2 = g(center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  Piece p;
  p.a = a;
  p.b = b;
  p.value = kronrod * half;
  p.abs_value = abs_sum * half;
  p.error = std::abs((kronrod - gauss) * half);
  return p;
}

}  // namespace

double integrate_semi_infinite(const std::function<double(double)>& f,
                               double tol, double scale) {
  if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  if (!(scale > 0.0)) throw DomainError("quadrature scale must be positive");

  // r = s·t/(1 − t) maps t ∈ [0, 1) onto [0, ∞); the Kronrod nodes never
  // touch either end point.
  auto g = [&](double t) {
    const double one_minus = 1.0 - t;
    const double r = scale * t / one_minus;
    if (!std::isfinite(r)) {
      // Refinement reached t = 1 in double precision: the tail never decays.
      throw QuadratureError(
          "semi-infinite quadrature did not converge: integrand tail does not "
          "decay",
          HUGE_VAL);
    }
    const double v = f(r) * scale / (one_minus * one_minus);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "integrand is not finite at r = " << r;
      throw QuadratureError(msg.str(), HUGE_VAL);
    }
    return v;
  };

  std::priority_queue<Piece> queue;
  double total = 0.0;
  double total_abs = 0.0;
  double total_err = 0.0;
  for (int i = 0; i < kInitialPieces; ++i) {
    const Piece p = gauss_kronrod(g, static_cast<double>(i) / kInitialPieces,
                                  static_cast<double>(i + 1) / kInitialPieces);
    total += p.value;
    total_abs += p.abs_value;
    total_err += p.error;
    queue.push(p);
  }

  int intervals = kInitialPieces;
  while (total_err > tol * total_abs) {
    if (intervals >= kMaxIntervals) {
      std::ostringstream msg;
      msg << "semi-infinite quadrature did not converge: achieved relative "
             "error "
          << total_err / std::max(total_abs, 1e-300) << " > " << tol;
      throw QuadratureError(msg.str(), total_err / std::max(total_abs, 1e-300));
    }
    const Piece worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Interval cannot be split further in double precision.
      std::ostringstream msg;
      msg << "semi-infinite quadrature did not converge (stalled at machine "
             "resolution); "
             "achieved relative error "
          << total_err / std::max(total_abs, 1e-300);
      throw QuadratureError(msg.str(), total_err / std::max(total_abs, 1e-300));
    }
    const Piece left = gauss_kronrod(g, worst.a, mid);
    const Piece right = gauss_kronrod(g, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_abs += left.abs_value + right.abs_value - worst.abs_value;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++intervals;
  }

  // Re-sum to shed accumulated cancellation in the running totals.
  double sum = 0.0;
  while (!queue.empty()) {
    sum += queue.top().value;
    queue.pop();
  }
  return sum;
}

}  // namespace coulombz::specfun
