#include "fluxtri/cli/config.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "fluxtri/cli/commands.hpp"
#include "fluxtri/optimize.hpp"

namespace fluxtri::cli {

namespace {

void emit(const RunConfig& cfg, const std::function<void(const RunConfig&, std::ostream&)>& command,
          std::ostream& out) {
  std::ostringstream buffer;
  command(cfg, buffer);
  if (cfg.out_path.empty() || cfg.out_path == "-") {
    out << buffer.str();
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file: " + cfg.out_path);
  file << buffer.str();
  file.flush();
  if (!file) throw IoError("cannot write output file: " + cfg.out_path);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Spectra, entanglement and Bell tests of three coupled flux qubits", "fluxtri"};
  app.set_config("--config", "", "Read option values from a TOML/INI file");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--coupling", cfg.coupling, "Pairwise coupling C in units of Delta")
      ->capture_default_str();
  app.add_option("--eps-min", cfg.eps_min, "Lower end of the bias grid")->capture_default_str();
  app.add_option("--eps-max", cfg.eps_max, "Upper end of the bias grid")->capture_default_str();
  app.add_option("--steps", cfg.steps, "Number of grid points")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed of the optimizer start generator")->capture_default_str();
  app.add_option("--starts", cfg.starts, "Optimizer starts")->capture_default_str();
  app.add_option("--out", cfg.out_path, "Output file (default: standard output)");

  auto* spectrum = app.add_subcommand("spectrum", "Branch-tracked eigenenergies over the bias grid");

  auto* sweep = app.add_subcommand("entangle-sweep", "Entanglement observables over the bias grid");
  sweep->add_option("--state", cfg.selector, "E2 or subspace_lower")
      ->check(CLI::IsMember({"E2", "subspace_lower"}))
      ->capture_default_str();
  sweep->add_option("--observables", cfg.observables, "Comma-separated observables (default: all)")
      ->delimiter(',')
      ->check(CLI::IsMember(known_observables()));

  auto* fidelity = app.add_subcommand("fidelity-report", "Minimal detector fidelities and curves");
  fidelity->add_option("--eps-star", cfg.eps_star, "Bias of the anticrossing (default: located)");
  fidelity->add_option("--curve-points", cfg.curve_points, "Samples of each fidelity curve")
      ->capture_default_str();

  auto* bell = app.add_subcommand("bell-optimize", "Maximal Bell violation for a named state");
  bell->add_option("--state", cfg.state_id, "GHZ, GHZbar, W, psi_maxL, bell_singlet or E2_left")
      ->required()
      ->check(CLI::IsMember({"GHZ", "GHZbar", "W", "psi_maxL", "bell_singlet", "E2_left"}));
  bell->add_option("--eps-star", cfg.eps_star, "Bias used for E2_left (default: located)");

  auto* prep = app.add_subcommand("prepare", "Resonant preparation in a degenerate pair");
  prep->add_option("--omega1", cfg.omega1, "Rabi frequency to the first level")->capture_default_str();
  prep->add_option("--omega2", cfg.omega2, "Rabi frequency to the second level")->capture_default_str();
  prep->add_option("--phi", cfg.phi, "Relative drive phase in radians")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const std::vector<std::pair<CLI::App*, std::function<void(const RunConfig&, std::ostream&)>>>
      commands{{spectrum, run_spectrum},
               {sweep, run_entangle_sweep},
               {fidelity, run_fidelity_report},
               {bell, run_bell_optimize},
               {prep, run_prepare}};
  try {
    for (const auto& [sub, command] : commands) {
      if (!sub->parsed()) continue;
      cfg.command = sub->get_name();
      cfg.validate();
      emit(cfg, command, out);
    }
    return kOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  }
}

}  // namespace fluxtri::cli
