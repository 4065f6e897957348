#include "fluxtri/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "fluxtri/bell.hpp"
#include "fluxtri/cli/csv.hpp"
#include "fluxtri/entangle.hpp"
#include "fluxtri/fidelity.hpp"
#include "fluxtri/model.hpp"
#include "fluxtri/pulseprep.hpp"
#include "fluxtri/spectrum.hpp"

#ifndef FLUXTRI_VERSION
#define FLUXTRI_VERSION "unknown"
#endif

namespace fluxtri::cli {

namespace {

using Row = std::vector<std::string>;

CsvMetadata metadata(const RunConfig& cfg, std::vector<std::pair<std::string, std::string>> extra) {
  CsvMetadata m;
  m.command = cfg.command;
  m.params = {{"coupling", format_number(cfg.coupling)},
              {"eps_min", format_number(cfg.eps_min)},
              {"eps_max", format_number(cfg.eps_max)},
              {"steps", std::to_string(cfg.steps)},
              {"starts", std::to_string(cfg.starts)}};
  m.params.insert(m.params.end(), extra.begin(), extra.end());
  m.seed = cfg.seed;
  m.version = FLUXTRI_VERSION;
  return m;
}

SystemParams params_of(const RunConfig& cfg) {
  return SystemParams::identical(0.0, 1.0, cfg.coupling);
}

std::vector<double> grid(const RunConfig& cfg) {
  std::vector<double> g(static_cast<std::size_t>(cfg.steps));
  for (int t = 0; t < cfg.steps; ++t) {
    g[t] = cfg.eps_min + (cfg.eps_max - cfg.eps_min) * t / (cfg.steps - 1);
  }
  g.back() = cfg.eps_max;
  return g;
}

using Observable = std::function<double(const PureState&)>;

Observable observable(const std::string& name) {
  static const std::map<std::string, Observable> table = [] {
    std::map<std::string, Observable> t;
    t["tau"] = [](const PureState& s) { return three_tangle(s); };
    t["global_ent"] = [](const PureState& s) { return global_entanglement(s); };
    auto from = [](DecomposedObservable d) {
      return [d = std::move(d)](const PureState& s) { return expectation(s, d); };
    };
    t["witness_ghz1"] = from(witness_decomposition(WitnessKind::Ghz1));
    t["witness_ghz2"] = from(witness_decomposition(WitnessKind::Ghz2));
    t["witness_wbar"] = from(witness_decomposition(WitnessKind::Wbar));
    t["bell_ghzbar"] = from(mermin_ghzbar());
    t["bell_wbar"] = from(mermin_wbar());
    return t;
  }();
  const auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown observable: " + name);
  return it->second;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ";") + s;
  return out;
}

PureState named_state(const std::string& id, const RunConfig& cfg) {
  if (id == "GHZ") return canonical_state(CanonicalState::GHZ);
  if (id == "GHZbar") return canonical_state(CanonicalState::GHZbar);
  if (id == "W") return canonical_state(CanonicalState::W);
  if (id == "psi_maxL") return canonical_state(CanonicalState::PsiMaxL);
  if (id == "bell_singlet") return canonical_state(CanonicalState::BellSinglet);
  if (id == "E2_left") {
    const SystemParams p = params_of(cfg);
    const double eps = cfg.eps_star ? -std::abs(*cfg.eps_star)
                                    : locate_tangle_peak(p, 2, cfg.eps_min, -0.05).eps;
    return solve_branches(p.with_bias(eps)).branch(2);
  }
  throw std::invalid_argument("unknown state: " + id);
}

}  // namespace

void RunConfig::validate() const {
  if (steps < 2) throw std::invalid_argument("--steps must be at least 2");
  if (!(eps_min < eps_max)) throw std::invalid_argument("--eps-min must be below --eps-max");
  if (starts < 1) throw std::invalid_argument("--starts must be positive");
  if (curve_points < 2) throw std::invalid_argument("--curve-points must be at least 2");
  if (!std::isfinite(coupling)) throw std::invalid_argument("--coupling must be finite");
}

void run_spectrum(const RunConfig& cfg, std::ostream& os) {
  const SweepResult s = sweep(params_of(cfg), cfg.eps_min, cfg.eps_max, cfg.steps);
  write_metadata(os, metadata(cfg, {}));
  write_row(os, {"eps", "E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8"});
  for (std::size_t t = 0; t < s.eps_grid.size(); ++t) {
    Row row{format_number(s.eps_grid[t])};
    for (int k = 0; k < 8; ++k) row.push_back(format_number(s.branches(t, k)));
    write_row(os, row);
  }
}

void run_entangle_sweep(const RunConfig& cfg, std::ostream& os) {
  const std::vector<std::string> names =
      cfg.observables.empty() ? known_observables() : cfg.observables;
  std::vector<Observable> obs;
  for (const auto& n : names) obs.push_back(observable(n));
  if (cfg.selector != "E2" && cfg.selector != "subspace_lower") {
    throw std::invalid_argument("unknown state selector: " + cfg.selector);
  }

  const SystemParams p = params_of(cfg);
  std::vector<PureState> states;
  if (cfg.selector == "E2") {
    const SweepResult s = sweep(p, cfg.eps_min, cfg.eps_max, cfg.steps);
    for (std::size_t t = 0; t < s.eps_grid.size(); ++t) states.push_back(s.branch_state(t, 2));
  } else {
    const PureState reference = canonical_state(CanonicalState::PsiMaxL);
    for (double e : grid(cfg)) {
      const DegenerateSubspace pair = branch_pair(p.with_bias(e), 7);
      states.push_back(max_entangled_subspace_state(PureState::normalized(pair.basis.col(0)),
                                                    PureState::normalized(pair.basis.col(1)),
                                                    reference));
    }
  }

  write_metadata(os, metadata(cfg, {{"selector", cfg.selector}, {"observables", join(names)}}));
  Row header{"eps"};
  header.insert(header.end(), names.begin(), names.end());
  write_row(os, header);
  const auto eps = grid(cfg);
  for (std::size_t t = 0; t < eps.size(); ++t) {
    Row row{format_number(eps[t])};
    for (const auto& o : obs) row.push_back(format_number(o(states[t])));
    write_row(os, row);
  }
}

void run_fidelity_report(const RunConfig& cfg, std::ostream& os) {
  FidelityTableOptions o;
  o.params = params_of(cfg);
  o.eps_star = cfg.eps_star ? std::abs(*cfg.eps_star)
                            : std::abs(locate_tangle_peak(o.params, 2, cfg.eps_min, -0.05).eps);
  o.starts = cfg.starts;
  o.seed = cfg.seed;
  const auto rows = fidelity_table(o);
  const FidelityCurves curves = fidelity_curves(cfg.curve_points, cfg.starts, cfg.seed);

  write_metadata(os, metadata(cfg, {{"eps_star", format_number(o.eps_star)},
                                    {"curve_points", std::to_string(cfg.curve_points)}}));
  write_row(os, {"block", "operator_id", "state_id", "threshold_kind", "threshold", "f_min",
                 "ambiguous", "f", "bell_ghz", "bell_wbar", "bell_chsh"});
  for (const auto& r : rows) {
    write_row(os, {"table", r.observable_id, r.state_id,
                   r.kind == ThresholdKind::BellClassicalBound ? "bell_classical_bound"
                                                               : "witness_zero_crossing",
                   format_number(r.threshold), format_number(r.f_min), r.ambiguous ? "1" : "0",
                   "", "", "", ""});
  }
  for (std::size_t k = 0; k < curves.f.size(); ++k) {
    write_row(os, {"curve", "", "", "", "", "", "", format_number(curves.f[k]),
                   format_number(curves.bell_ghz[k]), format_number(curves.bell_wbar[k]),
                   format_number(curves.bell_chsh[k])});
  }
}

void run_bell_optimize(const RunConfig& cfg, std::ostream& os) {
  const PureState state = named_state(cfg.state_id, cfg);
  const BellResult r = optimize_bell(state, state.qubits(), cfg.starts, cfg.seed);

  std::vector<std::pair<std::string, const Direction*>> vectors{
      {"a", &r.vectors.a}, {"a_p", &r.vectors.a_p}, {"b", &r.vectors.b}, {"b_p", &r.vectors.b_p}};
  if (r.vectors.c) {
    vectors.emplace_back("c", &*r.vectors.c);
    vectors.emplace_back("c_p", &*r.vectors.c_p);
  }
  write_metadata(os, metadata(cfg, {{"state", cfg.state_id}}));
  Row header{"state", "value", "starts", "seed"};
  Row row{cfg.state_id, format_number(r.value), std::to_string(r.starts_used),
          std::to_string(r.seed)};
  for (const auto& [name, d] : vectors) {
    for (int i = 0; i < 3; ++i) {
      header.push_back(name + "_" + "xyz"[i]);
      row.push_back(format_number((*d)[i]));
    }
  }
  write_row(os, header);
  write_row(os, row);
}

void run_prepare(const RunConfig& cfg, std::ostream& os) {
  DriveParams p{cfg.omega1, cfg.omega2, cfg.phi, 0.0};
  p.t = pulse_length(p);
  const Amplitudes final_state = prepare(p);
  const double fidelity = state_fidelity(prepared_state_closed_form(p), final_state);
  os << "pulse_length " << format_number(p.t) << '\n';
  for (int k = 0; k < 3; ++k) {
    os << "c" << k + 1 << ' ' << format_number(final_state[k].real()) << ' '
       << format_number(final_state[k].imag()) << " |c|=" << format_number(std::abs(final_state[k]))
       << '\n';
  }
  os << "fidelity " << format_number(fidelity) << '\n';
}

}  // namespace fluxtri::cli
