#include "coulombz/app.hpp"

#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "coulombz/commands.hpp"
#include "coulombz/errors.hpp"

namespace coulombz::cli {

namespace {

struct OutputOptions {
  std::string path;
  std::string format = "csv";
};

void add_output(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--out", o.path, "Write to this file instead of stdout");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void add_physics(CLI::App* cmd, PhysicsOptions& o) {
  cmd->add_option("--Z", o.Z, "Nuclear charge number")->capture_default_str();
  cmd->add_option("--xi", o.xi, "Mixing parameter xi = mu/Z")->capture_default_str();
  cmd->add_option("--alpha", o.alpha, "Fine structure constant")->capture_default_str();
  cmd->add_option("--kappa", o.kappa, "Spin-orbit quantum number")->capture_default_str();
  cmd->add_option("--nmax", o.nmax, "Highest radial quantum number")->capture_default_str();
  cmd->add_flag("--negative", o.negative, "Use the negative-energy branch");
  cmd->add_flag("--require-no-transition", o.require_no_transition,
                "Reject xi below the no-transition bound instead of warning");
}

void add_grid(CLI::App* cmd, std::vector<double>& grid) {
  cmd->add_option("--grid", grid, "Radial grid lo,hi,npts in units of 1/m")
      ->delimiter(',')
      ->expected(3);
}

std::optional<GridSpec> to_grid(const std::vector<double>& v) {
  if (v.empty()) return std::nullopt;
  if (v[2] != static_cast<int>(v[2])) throw DomainError("grid npts must be an integer");
  return GridSpec{v[0], v[1], static_cast<int>(v[2])};
}

void emit(const Table& t, const OutputOptions& o, std::ostream& out) {
  auto write = [&](std::ostream& s) {
    if (o.format == "json") {
      write_json(s, t);
    } else {
      write_csv(s, t);
    }
  };
  if (o.path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(o.path, std::ios::binary);
  if (!file) throw Error("cannot open output file " + o.path);
  write(file);
  if (!file) throw Error("failed writing output file " + o.path);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hermitian relativistic Coulomb spectra for Z > 137", "coulombz"};
  app.require_subcommand(1);

  PhysicsOptions phys;
  OutputOptions output;
  std::vector<double> grid;

  auto* spectrum = app.add_subcommand("spectrum", "Bound-state energy table");
  add_physics(spectrum, phys);
  spectrum->add_option("--kappamax", phys.kappamax,
                       "Tabulate kappa = -1, +1, ..., -kappamax, +kappamax");
  add_output(spectrum, output);

  auto* ground = app.add_subcommand("ground", "Ground energy, rotation data and gap");
  add_physics(ground, phys);
  ground->add_option("--kappamax", phys.kappamax, "Tabulate |kappa| up to this value");
  add_output(ground, output);

  int n_state = 0;
  bool uniform = false;
  auto* wave = app.add_subcommand("wavefunction", "Sampled radial spinor");
  add_physics(wave, phys);
  wave->add_option("--n", n_state, "Node count of the upper component")
      ->capture_default_str();
  add_grid(wave, grid);
  wave->add_flag("--uniform", uniform, "Space an explicit --grid uniformly");
  add_output(wave, output);

  std::string figure_id;
  Fig1Options fig1;
  Fig2Options fig2;
  Fig3Options fig3;
  std::optional<int> fig_nmax;
  auto* figure = app.add_subcommand("figure", "Export a figure data series");
  figure->add_option("id", figure_id, "Figure id")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3a", "fig3b"}));
  figure->add_option("--Z", fig3.Z, "Nuclear charge (fig2, fig3)")->capture_default_str();
  figure->add_option("--xi", fig3.xi, "Mixing parameter (fig3)")->capture_default_str();
  figure->add_option("--alpha", fig1.alpha, "Fine structure constant")
      ->capture_default_str();
  figure->add_option("--nmax", fig_nmax, "Highest level (fig1: 3, fig3: 2)");
  figure->add_option("--xi-list", fig1.xi_list, "fig1 xi values")
      ->delimiter(',')
      ->capture_default_str();
  figure->add_option("--z-min", fig1.z_min, "fig1 lowest Z")->capture_default_str();
  figure->add_option("--z-max", fig1.z_max, "fig1 highest Z")->capture_default_str();
  figure->add_option("--z-points", fig1.z_points, "fig1 number of Z values")
      ->capture_default_str();
  figure->add_option("--points", fig2.points, "fig2 number of xi values")
      ->capture_default_str();
  add_grid(figure, grid);
  add_output(figure, output);

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Run the numerical verification suite");
  verify->add_flag("--quick", verify_opts.quick, "Subsampled run");
  verify->add_flag("--inject-fault", verify_opts.inject_fault,
                   "Flip the lower-component sign (negative control)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    if (spectrum->parsed()) {
      validated_params(phys, phys.kappa, &err);
      emit(spectrum_table(phys), output, out);
    } else if (ground->parsed()) {
      validated_params(phys, phys.kappa, &err);
      emit(ground_table(phys), output, out);
    } else if (wave->parsed()) {
      validated_params(phys, phys.kappa, &err);
      emit(wavefunction_table(phys, n_state, to_grid(grid), uniform), output, out);
    } else if (figure->parsed()) {
      if (figure_id == "fig1") {
        if (fig_nmax) fig1.nmax = *fig_nmax;
        emit(fig1_table(fig1), output, out);
      } else if (figure_id == "fig2") {
        fig2.Z = fig3.Z;
        fig2.alpha = fig1.alpha;
        emit(fig2_table(fig2), output, out);
      } else {
        fig3.kappa = figure_id == "fig3a" ? -1 : 1;
        fig3.alpha = fig1.alpha;
        if (fig_nmax) fig3.nmax = *fig_nmax;
        fig3.grid = to_grid(grid);
        emit(fig3_table(fig3), output, out);
      }
    } else if (verify->parsed()) {
      bool all = true;
      for (const auto& c : run_verify(verify_opts)) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << c.detail << '\n';
        all = all && c.passed;
      }
      out << (all ? "all checks passed" : "verification FAILED") << '\n';
      return all ? kExitOk : kExitVerification;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace coulombz::cli
