#include "fluxtri/fidelity.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "fluxtri/bell.hpp"
#include "fluxtri/optimize.hpp"
#include "fluxtri/spectrum.hpp"

namespace fluxtri {

namespace {

constexpr int kScanPoints = 64;
constexpr double kRootTolerance = 1e-8;

double signed_threshold(const PureState& state, const DecomposedObservable& d, ThresholdKind kind,
                        double threshold) {
  const double ideal = expectation(state, d);
  if (kind == ThresholdKind::WitnessZeroCrossing) {
    if (!(ideal < threshold)) {
      throw std::invalid_argument("min_fidelity: witness does not detect the state");
    }
    return threshold;
  }
  if (!(std::abs(ideal) > threshold)) {
    throw std::invalid_argument("min_fidelity: Bell operator is not violated by the state");
  }
  return std::copysign(threshold, ideal);
}

}  // namespace

DecomposedObservable degrade(const DecomposedObservable& d, double f) {
  if (!(f >= 0.0 && f <= 1.0)) throw std::invalid_argument("degrade: f must lie in [0, 1]");
  DecomposedObservable out = d;
  for (auto& s : out.settings) {
    for (auto& factor : s.factors) {
      for (auto& t : factor.terms) {
        factor.identity += (1.0 - f) * t.scale;
        t.scale *= f;
      }
    }
  }
  return out;
}

double expectation_degraded(const PureState& state, const DecomposedObservable& d, double f) {
  return expectation(state, degrade(d, f));
}

FidelityReport min_fidelity(const PureState& state, const DecomposedObservable& d,
                            ThresholdKind kind, double threshold) {
  const double target = signed_threshold(state, d, kind, threshold);
  auto g = [&](double f) { return expectation_degraded(state, d, f) - target; };

  std::array<double, kScanPoints> fs{};
  std::array<double, kScanPoints> gs{};
  for (int k = 0; k < kScanPoints; ++k) {
    fs[k] = static_cast<double>(k) / (kScanPoints - 1);
    gs[k] = g(fs[k]);
  }
  // Sign changes between consecutive non-zero samples; an exact zero at f = 0 is the
  // trivial root of Bell operators whose weights sum to the bound.
  std::vector<std::pair<double, double>> brackets;
  int last = -1;
  for (int k = 0; k < kScanPoints; ++k) {
    if (std::abs(gs[k]) < 1e-12) continue;
    if (last >= 0 && (gs[last] > 0) != (gs[k] > 0)) brackets.emplace_back(fs[last], fs[k]);
    last = k;
  }
  if (brackets.empty()) throw NotFoundError("min_fidelity: no threshold crossing in (0, 1]");

  const auto [lo, hi] = brackets.back();
  FidelityReport r;
  r.threshold = threshold;
  r.kind = kind;
  r.f_min = bisect(g, lo, hi, kRootTolerance);
  r.ambiguous = brackets.size() > 1;
  return r;
}

FidelityReport min_fidelity(const PureState& state, const DecomposedObservable& d,
                            ThresholdKind kind) {
  return min_fidelity(state, d, kind,
                      kind == ThresholdKind::BellClassicalBound ? kBellLocalBound : 0.0);
}

std::vector<FidelityReport> fidelity_table(const FidelityTableOptions& o) {
  const PureState singlet = canonical_state(CanonicalState::BellSinglet);
  const PureState ghz = canonical_state(CanonicalState::GHZ);
  const PureState psi = canonical_state(CanonicalState::PsiMaxL);
  const double eps = std::abs(o.eps_star);
  const PureState e2_left = solve_branches(o.params.with_bias(-eps)).branch(2);
  const PureState e2_right = solve_branches(o.params.with_bias(eps)).branch(2);

  const auto v_dag = ghzbar_to_ghz_factor().adjoint().eval();
  const std::array<Eigen::Matrix2cd, 3> to_ghz{v_dag, v_dag, v_dag};
  const auto ghz_bell = optimize_bell(ghz, 3, o.starts, o.seed);

  std::vector<FidelityReport> rows;
  auto add = [&](std::string op, std::string state_id, const PureState& state,
                 const DecomposedObservable& d, ThresholdKind kind, bool flagged) {
    FidelityReport r = min_fidelity(state, d, kind);
    r.observable_id = std::move(op);
    r.state_id = std::move(state_id);
    r.ambiguous = r.ambiguous || flagged;
    rows.push_back(std::move(r));
  };
  const auto bell = ThresholdKind::BellClassicalBound;
  const auto wit = ThresholdKind::WitnessZeroCrossing;
  add("CHSH", "bell_singlet", singlet, chsh_operator(singlet_chsh_vectors()), bell, false);
  add("M_GHZbar", "E2_left", e2_left, mermin_ghzbar(), bell, false);
  add("W_GHZbar2", "E2_right", e2_right, witness_decomposition(WitnessKind::Ghz2), wit, false);
  add("W_Wbar", "psi_maxL", psi, witness_decomposition(WitnessKind::Wbar), wit, false);
  add("M_Wbar", "psi_maxL", psi, mermin_wbar(), bell, false);
  add("W_GHZ", "GHZ", ghz, conjugate_local(witness_decomposition(WitnessKind::Ghz1), to_ghz), wit,
      true);
  add("M_GHZ", "GHZ", ghz, bell_operator(ghz_bell.vectors), bell, true);
  if (o.include_optimized_wbar) {
    const auto opt = optimize_bell(psi, 3, o.starts, o.seed);
    add("M_Wbar_optimized", "psi_maxL", psi, bell_operator(opt.vectors), bell, true);
  }
  return rows;
}

FidelityCurves fidelity_curves(int points, int starts, std::uint64_t seed) {
  if (points < 2) throw std::invalid_argument("fidelity_curves: need at least two points");
  const PureState ghz = canonical_state(CanonicalState::GHZ);
  const PureState psi = canonical_state(CanonicalState::PsiMaxL);
  const PureState singlet = canonical_state(CanonicalState::BellSinglet);
  const auto m_ghz = bell_operator(optimize_bell(ghz, 3, starts, seed).vectors);
  const auto m_wbar = mermin_wbar();
  const auto chsh = chsh_operator(singlet_chsh_vectors());

  FidelityCurves c;
  for (int k = 0; k < points; ++k) {
    const double f = static_cast<double>(k) / (points - 1);
    c.f.push_back(f);
    c.bell_ghz.push_back(expectation_degraded(ghz, m_ghz, f));
    c.bell_wbar.push_back(expectation_degraded(psi, m_wbar, f));
    c.bell_chsh.push_back(expectation_degraded(singlet, chsh, f));
  }
  return c;
}

}  // namespace fluxtri
