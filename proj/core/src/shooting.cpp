#include <algorithm>
#include <cmath>
#include <sstream>

#include "coulombz/errors.hpp"
#include "coulombz/rotation.hpp"
#include "coulombz/verify.hpp"

namespace coulombz::verify {

namespace {

constexpr double kStartOffset = 1e-6;    // r₀ = kStartOffset/λ
constexpr double kFarDecay = 30.0;       // r_max = kFarDecay/k = 60/λ
constexpr double kLogStep = 1e-3;        // RK4 step in ln r
constexpr double kBisectTol = 1e-10;     // on ε/m
constexpr int kMaxBisections = 200;
constexpr double kRescale = 1e-200;

// Outward integration of φ″ = [γ(γ+1)/r² − 2α(εν + mμ)/r + m² − ε²]φ in
// the variable s = ln r, with v = r·dφ/dr.
struct Outward {
  double value = 0.0;  // φ(r_max), up to a positive factor kRescale^scalings
  int scalings = 0;
  int nodes = 0;       // sign changes on (r₀, r_max]
};

class Shooter {
 public:
  Shooter(const CouplingParams& p, double r0, double r_max)
      : p_(p), r0_(r0), r_max_(r_max) {
    const double g = gamma(p);
    if (g == 0.0) {
      throw DegenerateShapeError("shooting needs gamma != 0");
    }
    centrifugal_ = g * (g + 1.0);
    eta_ = g > 0.0 ? g + 1.0 : -g;
    const double span = std::log(r_max_ / r0_);
    steps_ = static_cast<int>(std::ceil(span / kLogStep));
    h_ = span / steps_;
  }

  Outward run(double epsilon) const {
    const double coulomb = 2.0 * p_.alpha * (epsilon * p_.nu() + p_.m * p_.mu());
    const double k2 = p_.m * p_.m - epsilon * epsilon;
    auto accel = [&](double s, double y, double v) {
      const double r = std::exp(s);
      return (centrifugal_ - coulomb * r + k2 * r * r) * y + v;
    };

    // φ ≈ r^η(1 + c₁r) with c₁ = −α(εν + mμ)/η, with r₀^η divided out.
    const double c1 = -0.5 * coulomb / eta_;
    double y = 1.0 + c1 * r0_;
    double v = eta_ + (eta_ + 1.0) * c1 * r0_;
    double s = std::log(r0_);

    Outward out;
    for (int i = 0; i < steps_; ++i) {
      const double k1y = v;
      const double k1v = accel(s, y, v);
      const double k2y = v + 0.5 * h_ * k1v;
      const double k2v = accel(s + 0.5 * h_, y + 0.5 * h_ * k1y, k2y);
      const double k3y = v + 0.5 * h_ * k2v;
      const double k3v = accel(s + 0.5 * h_, y + 0.5 * h_ * k2y, k3y);
      const double k4y = v + h_ * k3v;
      const double k4v = accel(s + h_, y + h_ * k3y, k4y);
      const double y_next = y + h_ / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y);
      v += h_ / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
      if ((y > 0.0 && y_next <= 0.0) || (y < 0.0 && y_next >= 0.0)) {
        ++out.nodes;
      }
      y = y_next;
      s += h_;
      if (std::abs(y) > 1.0 / kRescale) {
        y *= kRescale;
        v *= kRescale;
        ++out.scalings;
      }
    }
    out.value = y;
    return out;
  }

 private:
  CouplingParams p_;
  double r0_;
  double r_max_;
  double centrifugal_ = 0.0;
  double eta_ = 0.0;
  int steps_ = 0;
  double h_ = 0.0;
};

}  // namespace

ShootingResult shoot_eigenvalue(const CouplingParams& p, int nodes,
                                std::pair<double, double> bracket) {
  auto [lo, hi] = bracket;
  const double m = p.m;
  if (nodes < 0) throw DomainError("node count must be >= 0");
  if (!(lo < hi) || !(lo > -m) || !(hi < m)) {
    throw BracketError("bracket must satisfy -m < lo < hi < m");
  }

  const double e_max = std::max(std::abs(lo), std::abs(hi));
  const double e_min = (lo <= 0.0 && hi >= 0.0)
                           ? 0.0
                           : std::min(std::abs(lo), std::abs(hi));
  const double k_min = std::sqrt(m * m - e_max * e_max);
  const double k_max = std::sqrt(m * m - e_min * e_min);
  const double r0 = kStartOffset / (2.0 * k_max);
  const double r_max = kFarDecay / k_min;
  const Shooter shooter(p, r0, r_max);

  const Outward at_lo = shooter.run(lo);
  const Outward at_hi = shooter.run(hi);
  if (!(at_lo.nodes <= nodes && nodes < at_hi.nodes)) {
    std::ostringstream msg;
    msg << "bracket (" << lo << ", " << hi
        << ") does not enclose the state with " << nodes
        << " nodes: node counts " << at_lo.nodes << " and " << at_hi.nodes
        << " (no sign change)";
    throw BracketError(msg.str());
  }

  int iterations = 0;
  while (hi - lo > kBisectTol * m) {
    if (++iterations > kMaxBisections) {
      throw ConvergenceError("shooting did not converge in 200 bisections");
    }
    const double mid = 0.5 * (lo + hi);
    if (shooter.run(mid).nodes <= nodes) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  // One Ridders step on φ(r_max), which changes sign across the eigenvalue.
  double epsilon = 0.5 * (lo + hi);
  const Outward fa = shooter.run(lo);
  const Outward fb = shooter.run(hi);
  const Outward fm = shooter.run(epsilon);
  if (fa.scalings == fb.scalings && fa.scalings == fm.scalings) {
    const double disc = fm.value * fm.value - fa.value * fb.value;
    if (disc > 0.0) {
      const double dir = fa.value > fb.value ? 1.0 : -1.0;
      const double x =
          epsilon + (epsilon - lo) * dir * fm.value / std::sqrt(disc);
      if (x > lo && x < hi) epsilon = x;
    }
  }

  ShootingResult result;
  result.epsilon = epsilon;
  result.node_count = shooter.run(lo).nodes;
  result.iterations = iterations;
  result.bracket = {lo, hi};
  return result;
}

std::pair<double, double> positive_branch_bracket(const CouplingParams& p) {
  const Rotation rot = rotation(p);
  return {0.5 * p.m * (rot.c_minus - rot.c_plus), p.m * (1.0 - 1e-4)};
}

}  // namespace coulombz::verify
