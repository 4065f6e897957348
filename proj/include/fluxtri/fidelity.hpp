/**
 * @file fidelity.hpp
 * @brief Limited detector fidelity sigma' = f sigma + (1 - f) 1 applied to decomposed
 *        observables, and the minimal fidelity at which a violation survives.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fluxtri/entangle.hpp"
#include "fluxtri/model.hpp"

namespace fluxtri {

/// Every measured term c (n.sigma) becomes c (f n.sigma + (1 - f) 1); identity parts are kept.
/// Throws std::invalid_argument unless 0 <= f <= 1.
DecomposedObservable degrade(const DecomposedObservable& d, double f);

double expectation_degraded(const PureState& state, const DecomposedObservable& d, double f);

enum class ThresholdKind { WitnessZeroCrossing, BellClassicalBound };

inline constexpr double kBellLocalBound = 2.0;

struct FidelityReport {
  std::string observable_id;
  std::string state_id;
  double threshold = 0.0;
  ThresholdKind kind = ThresholdKind::WitnessZeroCrossing;
  double f_min = 0.0;
  bool ambiguous = false;
};

/// Smallest fidelity keeping the violation: the largest f in (0, 1] where the degraded
/// expectation crosses the threshold (0 for witnesses, +-2 for Bell operators, following the
/// sign of the ideal value). The trivial root at f = 0 is ignored. A 64-point pre-scan
/// brackets the crossings; several crossings set `ambiguous`.
///
/// Throws std::invalid_argument if the ideal expectation does not violate the threshold and
/// NotFoundError if no crossing exists.
FidelityReport min_fidelity(const PureState& state, const DecomposedObservable& d,
                            ThresholdKind kind, double threshold);
FidelityReport min_fidelity(const PureState& state, const DecomposedObservable& d,
                            ThresholdKind kind);

struct FidelityTableOptions {
  SystemParams params = SystemParams::working_point();
  double eps_star = 0.0;  ///< bias of the barred-GHZ states, |E2> at -eps_star and +eps_star
  int starts = 64;
  std::uint64_t seed = 42;
  bool include_optimized_wbar = true;
};

/// Minimal fidelities for the standard operator/state pairings.
std::vector<FidelityReport> fidelity_table(const FidelityTableOptions& options);

/// Degraded expectation curves of the three reference Bell tests.
struct FidelityCurves {
  std::vector<double> f;
  std::vector<double> bell_ghz;   ///< optimized GHZ operator on |GHZ>
  std::vector<double> bell_wbar;  ///< tabulated W operator, transformed, on |psi_max^L>
  std::vector<double> bell_chsh;  ///< CHSH on the singlet
};

FidelityCurves fidelity_curves(int points, int starts = 64, std::uint64_t seed = 42);

}  // namespace fluxtri
