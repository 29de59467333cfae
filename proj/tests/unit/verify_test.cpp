#include <cmath>
#include <vector>

#include "coulombz/errors.hpp"
#include "coulombz/rotation.hpp"
#include "coulombz/spectrum.hpp"
#include "coulombz/verify.hpp"
#include "coulombz/wavefunction.hpp"
#include "doctest.h"

using namespace coulombz;
using namespace coulombz::verify;
using spectrum::EnergySign;
namespace wf = coulombz::wavefunction;

namespace {

constexpr double kAlpha = 1.0 / 137.0;

std::vector<double> grid_for(const wf::SpinorShape& s) {
  return wf::geometric_grid(0.1 / s.lambda, 20.0 / s.lambda, 300);
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("second-order residual of closed-form states") {
  const auto p = make_params(1, 0.5, 1.2, 0.0, -1);
  const auto s = wf::spinor_shape(p, 0);
  const auto up = [&](double r) { return wf::upper(s, r); };
  const auto rep = residual_second_order(p, s.epsilon, up, grid_for(s));
  CHECK(rep.residual_norm <= 1e-6);
  CHECK(rep.grid.size() == 300);

  const auto zero = residual_second_order(
      p, s.epsilon, [](double) { return 0.0; }, grid_for(s));
  CHECK(zero.residual_norm == 0.0);

  // A 1% Gaussian bump must be caught.
  const double r_peak = s.eta / s.lambda;
  const double amp = 0.01 * std::abs(up(r_peak));
  const auto bumped = [&](double r) {
    const double d = (r - r_peak) * s.lambda;
    return up(r) + amp * std::exp(-d * d);
  };
  const auto bad = residual_second_order(p, s.epsilon, bumped, grid_for(s));
  CHECK(bad.residual_norm > 1e-3);
  CHECK(bad.worst_r > 0.0);

  CHECK_THROWS_AS(residual_second_order(p, s.epsilon, up, {0.1, 0.2, 0.3}),
                  DomainError);
  CHECK_THROWS_AS(residual_second_order(p, s.epsilon, up,
                                        {0.1, 0.2, 0.3, 0.3, 0.5, 0.6, 0.7}),
                  DomainError);
}

TEST_CASE("first-order residual of closed-form states") {
  const auto p = make_params(1, kAlpha, 200, 0.75, 1);
  for (int n = 0; n <= 2; ++n) {
    const auto s = wf::spinor_shape(p, n);
    const SpinorFn spinor = [&](double r) {
      return std::pair{wf::upper(s, r), wf::lower(s, r)};
    };
    CHECK(residual_first_order(p, s.epsilon, spinor, grid_for(s)).residual_norm <=
          1e-6);
    const auto shifted =
        residual_first_order(p, s.epsilon + 0.1, spinor, grid_for(s));
    CHECK(shifted.residual_norm > 1e-3);
    CHECK(shifted.residual_norm < 1.0);
  }
  const auto s = wf::spinor_shape(p, 0);
  CHECK(residual_first_order(p, s.epsilon,
                             [](double) { return std::pair{0.0, 0.0}; },
                             grid_for(s))
            .residual_norm == 0.0);
}

TEST_CASE("negative energy spinors satisfy the bottom-sign equations") {
  const auto p = make_params(1, kAlpha, 200, 0.75, -1);
  for (int n = 0; n <= 2; ++n) {
    const auto mapped = wf::negative_shape(p, n);
    const double eps = -mapped.epsilon;
    const SpinorFn spinor = [&](double r) { return wf::negative_spinor(mapped, r); };
    const auto grid = grid_for(mapped);
    CHECK(residual_first_order(p, eps, spinor, grid, EnergySign::negative)
              .residual_norm <= 1e-6);
    CHECK(residual_first_order(p, eps, spinor, grid, EnergySign::positive)
              .residual_norm > 1e-3);
    const RadialFn lower_of_negative = [&](double r) { return spinor(r).second; };
    CHECK(residual_second_order(p, eps, lower_of_negative, grid,
                                EnergySign::negative)
              .residual_norm <= 1e-6);
  }
}

TEST_CASE("shooting reproduces the Sommerfeld ground state") {
  const auto p = make_params(1, 0.5, 1.2, 0.0, -1);
  const ShootingResult res = shoot_eigenvalue(p, 0, {0.5, 0.95});
  CHECK(res.epsilon == doctest::Approx(0.8).epsilon(1e-6));
  CHECK(res.node_count == 0);
  CHECK(res.bracket.first < res.epsilon);
  CHECK(res.epsilon < res.bracket.second);
  CHECK(res.iterations > 0);
}

TEST_CASE("shooting agrees with the closed form at Z = 200") {
  const auto p = make_params(1, kAlpha, 200, 1.0, -1);
  const double want = spectrum::energy(p, 0, EnergySign::positive);
  const auto res = shoot_eigenvalue(p, 0, {0.3, 0.99});
  CHECK(std::abs(res.epsilon - want) <= 1e-6 * std::abs(want));
}

TEST_CASE("shooting finds the zero-energy state") {
  const auto p = make_params(1, 0.5, 4.0, 0.5, -1);
  const auto res = shoot_eigenvalue(p, 0, {-0.5, 0.5});
  CHECK(std::abs(res.epsilon) <= 1e-6);
}

TEST_CASE("shooting excited states and kappa > 0") {
  const auto p = make_params(1, kAlpha, 150, 0.75, 1);
  for (int n = 0; n <= 2; ++n) {
    const double want = spectrum::energy(p, n + 1, EnergySign::positive);
    const auto res = shoot_eigenvalue(p, n, {0.0, 0.999});
    CHECK(res.node_count == n);
    CHECK(std::abs(res.epsilon - want) <= 1e-6);
  }
}

TEST_CASE("positive branch bracket") {
  for (double xi : {0.35, 0.75, 1.0}) {
    const auto p = make_params(1, kAlpha, 250, xi, -1);
    const auto [lo, hi] = positive_branch_bracket(p);
    // Above the highest negative level, below the lowest positive one.
    CHECK(lo > spectrum::energy(p, 0, EnergySign::negative) - 1e-15);
    CHECK(lo < spectrum::energy(p, 0, EnergySign::positive));
    CHECK(hi < 1.0);
    const auto res = shoot_eigenvalue(p, 3, {lo, hi});
    CHECK(res.epsilon == doctest::Approx(spectrum::energy(p, 3, EnergySign::positive))
                             .epsilon(1e-8));
  }
  // A bracket reaching into the negative branch sees spurious nodes.
  const auto sym = make_params(1, kAlpha, 200, 1.0, -1);
  CHECK_THROWS_AS(shoot_eigenvalue(sym, 0, {-0.999, 0.999}), BracketError);
}

TEST_CASE("shooting bracket errors") {
  const auto p = make_params(1, 0.5, 1.2, 0.0, -1);
  CHECK_THROWS_AS(shoot_eigenvalue(p, 0, {0.85, 0.9}), BracketError);
  CHECK_THROWS_AS(shoot_eigenvalue(p, 0, {0.9, 0.5}), BracketError);
  CHECK_THROWS_AS(shoot_eigenvalue(p, 0, {-1.0, 0.5}), BracketError);
}

TEST_CASE("stability scan") {
  const double all = scan_stability(1000.0, 200);
  CHECK(all >= -1.0);
  CHECK(all > -1.0);

  const double sub = scan_stability(0.9, 50);
  CHECK(sub == doctest::Approx(std::sqrt(1.0 - 0.81)).epsilon(1e-12));

  CHECK(scan_stability(1000.0, 200, StabilityBounds::no_transition) >= -1e-12);
  CHECK(scan_stability(1000.0, 200, StabilityBounds::reality) == all);
  CHECK_THROWS_AS(scan_stability(10.0, 1), DomainError);
}

}
