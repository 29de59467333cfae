#include <algorithm>
#include <cmath>

#include "coulombz/errors.hpp"
#include "coulombz/rotation.hpp"
#include "coulombz/verify.hpp"

namespace coulombz::verify {

using spectrum::EnergySign;

namespace {

constexpr std::size_t kMinGridPoints = 7;

void check_grid(const std::vector<double>& r_grid) {
  if (r_grid.size() < kMinGridPoints) {
    throw DomainError("residual grid too coarse: need at least 7 points");
  }
  if (!(r_grid.front() > 0.0)) {
    throw DomainError("residual grid must be positive");
  }
  for (std::size_t i = 1; i < r_grid.size(); ++i) {
    if (!(r_grid[i] > r_grid[i - 1])) {
      throw DomainError("residual grid must be strictly increasing");
    }
  }
}

template <class F>
double second_derivative(const F& f, double r, double h) {
  return (-f(r + 2 * h) + 16 * f(r + h) - 30 * f(r) + 16 * f(r - h) -
          f(r - 2 * h)) /
         (12 * h * h);
}

template <class F>
double first_derivative(const F& f, double r, double h) {
  return (-f(r + 2 * h) + 8 * f(r + h) - 8 * f(r - h) + f(r - 2 * h)) /
         (12 * h);
}

ResidualReport finish(const std::vector<double>& r_grid,
                      const std::vector<double>& residual,
                      const std::vector<double>& scale) {
  ResidualReport rep;
  rep.grid = r_grid;
  const auto worst = std::max_element(
      residual.begin(), residual.end(),
      [](double a, double b) { return std::abs(a) < std::abs(b); });
  const double max_scale = *std::max_element(scale.begin(), scale.end());
  const double max_res = std::abs(*worst);
  rep.worst_r = r_grid[static_cast<std::size_t>(worst - residual.begin())];
  rep.residual_norm = max_scale > 0.0 ? max_res / max_scale : 0.0;
  return rep;
}

}  // namespace

ResidualReport residual_second_order(const CouplingParams& p, double epsilon,
                                     const RadialFn& phi,
                                     const std::vector<double>& r_grid,
                                     EnergySign branch, double rel_step) {
  check_grid(r_grid);
  const double g = gamma(p);
  const double centrifugal =
      branch == EnergySign::positive ? g * (g + 1.0) : g * (g - 1.0);
  const double coulomb = 2.0 * p.alpha * (epsilon * p.nu() + p.m * p.mu());
  const double kinetic = epsilon * epsilon - p.m * p.m;

  std::vector<double> residual(r_grid.size());
  std::vector<double> scale(r_grid.size());
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    const double r = r_grid[i];
    const double h = rel_step * r;
    const double f = phi(r);
    const double d2 = second_derivative(phi, r, h);
    const double t1 = centrifugal / (r * r) * f;
    const double t2 = coulomb / r * f;
    const double t3 = kinetic * f;
    residual[i] = -d2 + t1 - t2 - t3;
    scale[i] = std::abs(d2) + std::abs(t1) + std::abs(t2) + std::abs(t3);
  }
  return finish(r_grid, residual, scale);
}

ResidualReport residual_first_order(const CouplingParams& p, double epsilon,
                                    const SpinorFn& spinor,
                                    const std::vector<double>& r_grid,
                                    EnergySign branch, double rel_step) {
  check_grid(r_grid);
  const Rotation rot = rotation(p);
  const bool positive = branch == EnergySign::positive;
  const double mc = p.m * (positive ? rot.c_plus : rot.c_minus);
  const double ms = p.m * (positive ? rot.s_plus : rot.s_minus);
  const double two_alpha_nu = 2.0 * p.alpha * p.nu();
  auto upper = [&](double r) { return spinor(r).first; };
  auto lower = [&](double r) { return spinor(r).second; };

  std::vector<double> residual(r_grid.size());
  std::vector<double> scale(r_grid.size());
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    const double r = r_grid[i];
    const double h = rel_step * r;
    const auto [fp, fm] = spinor(r);
    const double dfp = first_derivative(upper, r, h);
    const double dfm = first_derivative(lower, r, h);
    const double diag1 = mc - epsilon - (positive ? two_alpha_nu / r : 0.0);
    const double diag2 = -mc - epsilon - (positive ? 0.0 : two_alpha_nu / r);
    const double off = -ms + rot.gamma / r;

    const double row1 = diag1 * fp + off * fm - dfm;
    const double row2 = off * fp + dfp + diag2 * fm;
    const double s1 = std::abs(diag1 * fp) + std::abs(off * fm) + std::abs(dfm);
    const double s2 = std::abs(off * fp) + std::abs(dfp) + std::abs(diag2 * fm);
    residual[i] = std::abs(row1) > std::abs(row2) ? row1 : row2;
    scale[i] = std::max(s1, s2);
  }
  return finish(r_grid, residual, scale);
}

}  // namespace coulombz::verify
