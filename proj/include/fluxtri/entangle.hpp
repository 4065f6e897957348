/**
 * @file entangle.hpp
 * @brief Tripartite entanglement measures, canonical states, witnesses and their
 *        decompositions into local measurement settings.
 */
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fluxtri/qmath.hpp"

namespace fluxtri {

/// One measured spin component on a qubit, weighted by `scale` in post-processing.
struct SpinTerm {
  double scale;
  Direction axis;
};

/// Single-qubit factor c0 * 1 + sum_k scale_k (axis_k . sigma).
///
/// A factor with no terms is an unmeasured qubit. Composite factors such as
/// (1 - sx + sz) keep one term per measured Pauli component so that detector
/// imperfections act on each component separately.
struct LocalFactor {
  double identity = 0.0;
  std::vector<SpinTerm> terms;

  static LocalFactor unit() { return {1.0, {}}; }
  static LocalFactor spin(const Direction& n, double scale = 1.0) { return {0.0, {{scale, n}}}; }
  /// c0 + cx sx + cy sy + cz sz, one term per non-zero Pauli coefficient.
  static LocalFactor pauli_sum(double c0, double cx, double cy, double cz);

  bool is_identity() const { return terms.empty(); }
  Eigen::Matrix2cd matrix() const;
};

/// Weighted tensor product of local factors: one experimental setting.
struct Setting {
  double weight = 1.0;
  std::vector<LocalFactor> factors;
};

/// Observable written as a weighted sum of local settings.
struct DecomposedObservable {
  int n_qubits = 3;
  std::vector<Setting> settings;

  DecomposedObservable scaled(double lambda) const;
};

/// sum_s weight_s (x)_q factor_{s,q}; throws if a setting has the wrong number of factors.
Operator assemble(const DecomposedObservable& d);

/// Expectation value evaluated setting by setting (no 8x8 assembly).
double expectation(const PureState& state, const DecomposedObservable& d);

/// Applies single-qubit unitaries U_q to every measured direction:
/// U^dag (n.sigma) U = (R n).sigma, so the result assembles to U^dag A U for U = (x)_q U_q.
DecomposedObservable conjugate_local(const DecomposedObservable& d,
                                     std::span<const Eigen::Matrix2cd> unitaries);

enum class CanonicalState { GHZ, GHZbar, W, PsiMaxL, BellSinglet };

PureState canonical_state(CanonicalState kind);

/// Coffman-Kundu-Wootters 3-tangle of a pure three-qubit state, in [0, 1].
double three_tangle(const PureState& state);

/// Q = 2 (1 - (1/3) sum_k Tr rho_k^2), in [0, 1].
double global_entanglement(const PureState& state);

struct Witness {
  double alpha = 0.0;
  PureState target;
  Operator matrix;
  std::optional<DecomposedObservable> decomposition;
};

/// alpha * 1 - |target><target|; throws unless 0 < alpha < 1.
Witness witness_from_state(double alpha, const PureState& target);

enum class WitnessKind { Ghz1, Ghz2, Wbar };

/// Separability offsets of the GHZ-family and W-family witnesses.
inline constexpr double kGhzWitnessAlpha = 3.0 / 4.0;
inline constexpr double kWWitnessAlpha = 2.0 / 3.0;

/// Local decompositions of the three witnesses (four, four and five settings).
DecomposedObservable witness_decomposition(WitnessKind kind);

/// Constructed witness for `kind` with its decomposition attached.
Witness witness(WitnessKind kind);

/// Single-qubit factors of the local transform mapping |psi_max^L> onto |W>.
std::array<Eigen::Matrix2cd, 3> local_W_factors();

/// 8x8 unitary U^L = (x)_q local_W_factors()[q].
Operator local_W_transform();

/// Single-qubit unitary V with V^(x)3 |GHZbar> = |GHZ>.
Eigen::Matrix2cd ghzbar_to_ghz_factor();

}  // namespace fluxtri
