/**
 * @file spectrum.hpp
 * @brief Diagonalization, bias sweeps with branch tracking, degenerate subspaces,
 *        anticrossing search and eigenstate template fits.
 *
 * Branch labels E1..E8 follow the figure convention of the three-qubit loop:
 * E1..E4 are the levels of the permutation-symmetric (spin-3/2) sector in ascending
 * order, E5..E8 the two exactly degenerate pairs of the remaining frustrated sector,
 * also ascending. For non-identical qubits, where that sector split does not exist,
 * labels fall back to ascending order.
 */
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "fluxtri/model.hpp"
#include "fluxtri/qmath.hpp"

namespace fluxtri {

inline constexpr double kDegeneracyTolerance = 1e-8;

struct Spectrum {
  SystemParams params;
  Eigen::VectorXd energies;  ///< ascending
  Eigen::MatrixXcd states;   ///< column k is the eigenvector of energies[k]

  PureState state(int k) const { return PureState::normalized(states.col(k)); }
};

Spectrum solve(const SystemParams& p);

/// Eigenpairs in branch-label order: energies[k] and states.col(k) belong to E_{k+1}.
struct BranchSpectrum {
  SystemParams params;
  Eigen::VectorXd energies;
  Eigen::MatrixXcd states;

  /// State of branch E_label (label is 1-based).
  PureState branch(int label) const;
  double energy(int label) const { return energies[label - 1]; }
};

BranchSpectrum solve_branches(const SystemParams& p);

/// Orthonormal basis of the permutation-symmetric subspace (Dicke states), 8x4.
const Eigen::MatrixXcd& symmetric_sector_basis();

struct SweepResult {
  std::vector<double> eps_grid;
  Eigen::MatrixXd branches;  ///< row t, column k: energy of E_{k+1} at eps_grid[t]
  std::vector<Eigen::MatrixXcd> branch_states;  ///< per grid point, column k = tracked E_{k+1}

  PureState branch_state(std::size_t t, int label) const {
    return PureState::normalized(branch_states[t].col(label - 1));
  }
};

/// Sweeps every bias uniformly over [eps_min, eps_max] and tracks branches by state overlap.
/// Throws std::invalid_argument unless steps >= 2 and eps_min < eps_max.
SweepResult sweep(const SystemParams& p, double eps_min, double eps_max, int steps);

struct DegenerateSubspace {
  double energy = 0.0;
  Eigen::MatrixXcd basis;  ///< orthonormal columns
};

/// Groups eigenvalues closer than `tol` (chained) and returns the groups of dimension >= 2.
std::vector<DegenerateSubspace> degenerate_subspaces(const Spectrum& s,
                                                     double tol = kDegeneracyTolerance);

/// The degenerate pair of branches (E5, E6) or (E7, E8) at the given parameters.
DegenerateSubspace branch_pair(const SystemParams& p, int first_label);

struct Anticrossing {
  double eps_star = 0.0;
  double gap = 0.0;
};

/// Minimizes E_hi - E_lo over the window by grid bracketing plus golden-section refinement.
/// Throws NotFoundError when the minimum lies on the window boundary.
Anticrossing locate_anticrossing(const SystemParams& p, int branch_lo, int branch_hi,
                                 double window_lo, double window_hi);

/// Bias in the window where the 3-tangle of branch `label` peaks.
struct TanglePeak {
  double eps = 0.0;
  double tangle = 0.0;
};
TanglePeak locate_tangle_peak(const SystemParams& p, int label, double window_lo,
                              double window_hi);

enum class Template { GroundE1, ExcitedE3, ExcitedE4, E2Left };

/// One-parameter eigenstate families, normalized.
///   GroundE1:  f_all + d (|uuu> + |ddd>)
///   ExcitedE3: |ddd> + |uuu> - d f_all
///   ExcitedE4: |ddd> - |uuu> + d (f_up - f_down)
///   E2Left:    (|uud>+|udu>+|duu>-|ddd>) / (2 sqrt(1+d^2)) + d (|ddu>+|dud>+|udd>-|uuu>)
/// where f_up (f_down) sums the three frustrated states with two up (two down) spins.
PureState template_state(Template id, double delta);

struct TemplateFit {
  Template id = Template::GroundE1;
  double delta = 0.0;    ///< signed optimum in [-1, 1]
  double overlap = 0.0;  ///< |<template(delta)|state>|
  bool mismatch = false; ///< overlap < 0.9
};

TemplateFit fit_template(const PureState& state, Template id);

/// Superposition cos(t) u1 + e^{i p} sin(t) u2 of maximal global entanglement.
/// When several inequivalent maximizers exist (within 1e-9 in Q), the one with the
/// largest overlap with `reference` is returned; otherwise the first in grid order.
PureState max_entangled_subspace_state(const PureState& u1, const PureState& u2,
                                       const std::optional<PureState>& reference = std::nullopt);

}  // namespace fluxtri
