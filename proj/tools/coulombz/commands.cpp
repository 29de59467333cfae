#include "coulombz/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "coulombz/errors.hpp"
#include "coulombz/rotation.hpp"
#include "coulombz/spectrum.hpp"
#include "coulombz/verify.hpp"
#include "coulombz/wavefunction.hpp"

namespace coulombz::cli {

namespace {

using spectrum::EnergySign;
namespace wf = coulombz::wavefunction;

std::vector<int> kappa_list(const PhysicsOptions& o) {
  if (!o.kappamax) return {o.kappa};
  if (*o.kappamax < 1) throw DomainError("--kappamax must be >= 1");
  std::vector<int> out;
  for (int k = 1; k <= *o.kappamax; ++k) {
    out.push_back(-k);
    out.push_back(k);
  }
  return out;
}

// The lowest level of a κ sector: n = 0 exists only on the γ branch whose
// sign matches the energy sign's ground state (γ < 0 for positive energy).
int first_level(int kappa, EnergySign sign) {
  const bool ground_branch = sign == EnergySign::positive ? kappa < 0 : kappa > 0;
  return ground_branch ? 0 : 1;
}

std::vector<double> uniform_grid(const GridSpec& g) {
  if (g.npts < 2 || !(g.hi > g.lo) || g.lo < 0.0) {
    throw DomainError("grid needs 0 <= lo < hi and npts >= 2");
  }
  std::vector<double> out(g.npts);
  const double h = (g.hi - g.lo) / (g.npts - 1);
  for (int i = 0; i < g.npts; ++i) out[i] = g.lo + h * i;
  out.back() = g.hi;
  return out;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

}  // namespace

CouplingParams validated_params(const PhysicsOptions& o, int kappa,
                                std::ostream* warn) {
  const CouplingParams p = make_params(o.m, o.alpha, o.Z, o.xi, kappa);
  const double bound = no_transition_bound(o.alpha, o.Z);
  if (o.xi < bound) {
    const std::string msg =
        "xi = " + format_number(o.xi) + " is below the no-transition bound " +
        "xi >= 1 - (alpha*Z)^-1 = " + format_number(bound) +
        "; positive and negative energy states may mix";
    if (o.require_no_transition) throw DomainError(msg);
    if (warn) *warn << "warning: " << msg << '\n';
  }
  return p;
}

Table spectrum_table(const PhysicsOptions& o) {
  if (o.nmax < 0) throw DomainError("--nmax must be >= 0");
  const EnergySign sign = o.negative ? EnergySign::negative : EnergySign::positive;
  const bool with_sommerfeld = o.xi == 0.0;
  Table t;
  t.columns = {"n", "kappa", "epsilon_over_m"};
  if (with_sommerfeld) t.columns.push_back("sommerfeld_over_m");
  for (int kappa : kappa_list(o)) {
    const CouplingParams p = validated_params(o, kappa, nullptr);
    for (int n = first_level(kappa, sign); n <= o.nmax; ++n) {
      std::vector<double> row = {static_cast<double>(n), static_cast<double>(kappa),
                                 spectrum::energy(p, n, sign) / p.m};
      if (with_sommerfeld) {
        row.push_back(spectrum::sommerfeld_energy(p.alpha, p.Z, kappa, n, sign, p.m) /
                      p.m);
      }
      t.add_row(std::move(row));
    }
  }
  t.metadata = {{"Z", o.Z}, {"xi", o.xi}, {"alpha", o.alpha}};
  return t;
}

Table ground_table(const PhysicsOptions& o) {
  Table t;
  t.columns = {"kappa", "gamma", "epsilon0_over_m", "c_plus", "c_minus",
               "s_plus", "s_minus", "gap_over_m"};
  for (int kappa : kappa_list(o)) {
    const CouplingParams p = validated_params(o, kappa, nullptr);
    const Rotation rot = rotation(p);
    t.add_row({static_cast<double>(kappa), rot.gamma,
               spectrum::ground_energy(p) / p.m, rot.c_plus, rot.c_minus,
               rot.s_plus, rot.s_minus, spectrum::energy_gap(p) / p.m});
  }
  t.metadata = {{"Z", o.Z}, {"xi", o.xi}, {"alpha", o.alpha}};
  return t;
}

Table wavefunction_table(const PhysicsOptions& o, int n,
                         const std::optional<GridSpec>& grid, bool uniform) {
  const CouplingParams p = validated_params(o, o.kappa, nullptr);
  Table t;
  t.columns = {"r_times_m", "phi_plus", "phi_minus"};
  const wf::SpinorShape s =
      o.negative ? wf::negative_shape(p, n) : wf::spinor_shape(p, n);
  std::vector<double> r_grid;
  if (!grid) {
    r_grid = wf::default_grid(s);
  } else if (uniform) {
    r_grid = uniform_grid(*grid);
  } else {
    r_grid = wf::geometric_grid(grid->lo, grid->hi, grid->npts);
  }
  for (double r : r_grid) {
    double a = wf::upper(s, r);
    double b = wf::lower(s, r);
    if (o.negative) std::swap(a, b);
    t.add_row({r * p.m, a, b});
  }
  t.metadata = {{"Z", o.Z},       {"xi", o.xi},
                {"alpha", o.alpha}, {"kappa", static_cast<double>(o.kappa)},
                {"n", static_cast<double>(n)}, {"epsilon_over_m",
                 (o.negative ? -s.epsilon : s.epsilon) / p.m}};
  return t;
}

Table fig1_table(const Fig1Options& o) {
  if (o.z_points < 1 || !(o.z_max >= o.z_min) || !(o.z_min > 0.0)) {
    throw DomainError("fig1 needs 0 < z_min <= z_max and z_points >= 1");
  }
  Table t;
  t.columns = {"Z", "n", "kappa", "xi", "epsilon_over_m"};
  for (double xi : o.xi_list) {
    for (int kappa : o.kappas) {
      for (int i = 0; i < o.z_points; ++i) {
        const double Z =
            o.z_points == 1 ? o.z_min
                            : o.z_min + (o.z_max - o.z_min) * i / (o.z_points - 1);
        // Only parameter points inside the Hermitian domain are emitted.
        if (2.0 * xi < 1.0 - 1.0 / ((o.alpha * Z) * (o.alpha * Z))) continue;
        const CouplingParams p = make_params(1.0, o.alpha, Z, xi, kappa);
        for (int n = first_level(kappa, EnergySign::positive); n <= o.nmax; ++n) {
          t.add_row({Z, static_cast<double>(n), static_cast<double>(kappa), xi,
                     spectrum::energy(p, n, EnergySign::positive)});
        }
      }
    }
  }
  t.metadata = {{"alpha", o.alpha}, {"z_min", o.z_min}, {"z_max", o.z_max}};
  return t;
}

Table fig2_table(const Fig2Options& o) {
  if (o.points < 2) throw DomainError("fig2 needs at least 2 points");
  const double lo = std::max(no_transition_bound(o.alpha, o.Z),
                             reality_bound(o.alpha, o.Z));
  Table t;
  t.columns = {"xi", "epsilon0_over_m"};
  for (int i = 0; i < o.points; ++i) {
    const double xi = i + 1 == o.points ? 1.0 : lo + (1.0 - lo) * i / (o.points - 1);
    const CouplingParams p = make_params(1.0, o.alpha, o.Z, xi, o.kappa);
    t.add_row({xi, spectrum::ground_energy(p)});
  }
  t.metadata = {{"Z", o.Z}, {"alpha", o.alpha}, {"kappa", static_cast<double>(o.kappa)}};
  return t;
}

Table fig3_table(const Fig3Options& o) {
  if (o.nmax < 0) throw DomainError("fig3 needs nmax >= 0");
  const CouplingParams p = make_params(1.0, o.alpha, o.Z, o.xi, o.kappa);
  std::vector<wf::SpinorShape> states;
  for (int n = 0; n <= o.nmax; ++n) states.push_back(wf::spinor_shape(p, n));
  GridSpec g;
  if (o.grid) {
    g = *o.grid;
  } else {
    // Long enough for the slowest-decaying state to fall below 1e−12.
    double hi = 0.0;
    for (const auto& s : states) hi = std::max(hi, (70.0 + 10.0 * s.n) / s.lambda);
    g = {0.0, hi, 8001};
  }
  const std::vector<double> r_grid = uniform_grid(g);
  Table t;
  t.columns = {"n", "r_times_m", "phi_plus", "phi_minus"};
  for (const auto& s : states) {
    for (double r : r_grid) {
      t.add_row({static_cast<double>(s.n), r, wf::upper(s, r), wf::lower(s, r)});
    }
  }
  t.metadata = {{"Z", o.Z}, {"xi", o.xi}, {"alpha", o.alpha},
                {"kappa", static_cast<double>(o.kappa)}};
  return t;
}

// ---------------------------------------------------------------------------

namespace {

struct SamplePoint {
  CouplingParams p;
  int n;
};

// Z ∈ {50, 150, 250}, ξ ∈ {bound + 0.05, 0.75, 1}, κ = ±1, n = 0..2.
std::vector<SamplePoint> oracle_sample(bool quick) {
  const double alpha = kAlphaDefault;
  std::vector<SamplePoint> out;
  for (double Z : {50.0, 150.0, 250.0}) {
    for (double xi : {no_transition_bound(alpha, Z) + 0.05, 0.75, 1.0}) {
      for (int kappa : {-1, 1}) {
        const CouplingParams p = make_params(1.0, alpha, Z, xi, kappa);
        for (int n = 0; n <= 2; ++n) out.push_back({p, n});
      }
    }
  }
  if (quick) {
    std::vector<SamplePoint> sub;
    for (std::size_t i = 0; i < out.size(); i += 9) sub.push_back(out[i]);
    return sub;
  }
  return out;
}

CheckResult check(std::string name, double value, double limit, bool below = true) {
  const bool ok = below ? value <= limit : value > limit;
  return {std::move(name), ok,
          fmt("%.3e", value) + (below ? " <= " : " > ") + fmt("%.0e", limit)};
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& o) {
  const double lower_sign = o.inject_fault ? -1.0 : 1.0;
  const auto sample = oracle_sample(o.quick);
  std::vector<CheckResult> out;

  {
    double worst = 0.0;
    for (double x : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99}) {
      for (int kappa : {-2, -1, 1, 2}) {
        const CouplingParams p = make_params(1.0, 0.5, 2.0 * x, 0.0, kappa);
        for (int n = 0; n <= 5; ++n) {
          for (auto sign : {EnergySign::positive, EnergySign::negative}) {
            worst = std::max(worst, std::abs(spectrum::energy(p, n, sign) -
                                             spectrum::sommerfeld_energy(
                                                 0.5, 2.0 * x, kappa, n, sign)));
          }
        }
      }
    }
    out.push_back(check("sommerfeld_reduction", worst, 1e-12));
  }

  {
    const CouplingParams p = make_params(1.0, 0.5, 4.0, 0.5, -1);
    const double e0 = spectrum::energy(p, 0, EnergySign::positive);
    out.push_back(check("zero_energy_ground_state",
                        std::max(std::abs(e0), std::abs(e0 - rotation(p).c_minus)),
                        1e-12));
  }

  {
    const double min_e0 = verify::scan_stability(1000.0, o.quick ? 50 : 200);
    out.push_back({"vacuum_stability", min_e0 >= -1.0 + 1e-9,
                   "min epsilon0/m = " + fmt("%.6f", min_e0) + " >= -1 + 1e-9"});
  }

  {
    double worst = 0.0;
    for (const auto& [p, n] : sample) {
      const int index = p.kappa > 0 ? n + 1 : n;
      const double want = spectrum::energy(p, index, EnergySign::positive);
      const auto res = verify::shoot_eigenvalue(p, n, verify::positive_branch_bracket(p));
      worst = std::max(worst, std::abs(res.epsilon - want) / std::abs(want));
    }
    out.push_back(check("shooting_agreement", worst, 1e-6));
  }

  {
    double first = 0.0;
    double second = 0.0;
    double control = HUGE_VAL;
    double balance = 0.0;
    for (const auto& [p, n] : sample) {
      const wf::SpinorShape s = wf::spinor_shape(p, n);
      const auto grid = wf::geometric_grid(0.1 / s.lambda, 20.0 / s.lambda, 300);
      const verify::SpinorFn spinor = [&](double r) {
        return std::pair{wf::upper(s, r), lower_sign * wf::lower(s, r)};
      };
      const verify::RadialFn up = [&](double r) { return wf::upper(s, r); };
      first = std::max(first, verify::residual_first_order(p, s.epsilon, spinor, grid)
                                  .residual_norm);
      second = std::max(second,
                        verify::residual_second_order(p, s.epsilon, up, grid).residual_norm);
      control = std::min(control,
                         verify::residual_first_order(p, s.epsilon + 0.1, spinor, grid)
                             .residual_norm);
      double scale = 0.0;
      double diff = 0.0;
      for (double t = 0.01; t <= 30.0; t *= 1.1) {
        const double r = t / s.lambda;
        const double low = lower_sign * wf::lower(s, r);
        const double kb = wf::kinetic_balance(p, s.epsilon, wf::upper(s, r),
                                              wf::upper_deriv(s, r), r);
        scale = std::max({scale, std::abs(low), std::abs(wf::upper(s, r))});
        diff = std::max(diff, std::abs(low - kb));
      }
      balance = std::max(balance, diff / scale);
    }
    out.push_back(check("first_order_residual", first, 1e-6));
    out.push_back(check("second_order_residual", second, 1e-6));
    out.push_back(check("residual_negative_control", control, 1e-3, false));
    out.push_back(check("kinetic_balance", balance, 1e-10));
  }

  {
    double worst = 0.0;
    for (double Z : {60.0, 150.0, 250.0}) {
      for (double xi : {0.8, 1.0}) {
        const CouplingParams p = make_params(1.0, kAlphaDefault, Z, xi, -1);
        const double a = wf::ground_norm_analytic(p);
        worst = std::max(worst, std::abs(wf::normalize(p, 0) - a) / a);
      }
    }
    out.push_back(check("ground_normalization", worst, 1e-8));
  }

  {
    double worst = 0.0;
    for (const auto& [p, n] : sample) {
      (void)n;
      const Rotation rot = rotation(p);
      const double gap = spectrum::energy_gap(p);
      worst = std::max({worst, std::abs(gap - (rot.c_plus + rot.c_minus)),
                        std::abs(gap - (spectrum::ground_energy(p) + rot.c_plus))});
    }
    out.push_back(check("energy_gap_identity", worst, 1e-12));
  }

  {
    double worst = 0.0;
    for (double xi : {0.6, 0.75, 1.0}) {
      for (int kappa : {-1, 1, -2}) {
        const CouplingParams p = make_params(1.0, kAlphaDefault, 200.0, xi, kappa);
        const Rotation a = rotation(p);
        const Rotation b = rotation(negative_map(p));
        worst = std::max({worst, std::abs(b.c_plus - a.c_minus),
                          std::abs(b.c_minus - a.c_plus),
                          std::abs(b.s_plus + a.s_minus),
                          std::abs(b.s_minus + a.s_plus)});
      }
    }
    out.push_back(check("negative_map_consistency", worst, 1e-12));
  }

  return out;
}

}  // namespace coulombz::cli
