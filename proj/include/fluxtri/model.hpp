#pragma once

#include <array>

#include "fluxtri/qmath.hpp"

namespace fluxtri {

/// Biases, tunnel splittings and pairwise couplings of the three qubits, in units of Delta.
struct SystemParams {
  std::array<double, 3> eps{0.0, 0.0, 0.0};
  std::array<double, 3> delta{1.0, 1.0, 1.0};
  Eigen::Matrix3d coupling = Eigen::Matrix3d::Zero();

  /// Identical qubits with uniform antiferromagnetic coupling C.
  static SystemParams identical(double eps, double delta, double coupling);
  /// Default working point: Delta = 1, C = 1.4.
  static SystemParams working_point(double eps = 0.0) { return identical(eps, 1.0, 1.4); }

  /// Copy with every bias set to `eps`.
  SystemParams with_bias(double eps) const;
  bool identical_qubits() const;

  /// Throws std::invalid_argument on non-positive delta or a non-symmetric / non-zero-diagonal coupling.
  void validate() const;
};

/// Junction parameters of the shared-junction coupler.
struct JunctionParams {
  double r = 0.0;      ///< size ratio E_J / E_J,S
  double alpha = 0.8;  ///< qubit junction asymmetry
  double e_j = 1.0;    ///< qubit Josephson energy
};

/// C = r E_J (1 - 1/(4 alpha^2)). Throws std::domain_error for alpha <= 1/2 and
/// std::invalid_argument for r outside [0, 1).
double coupling_from_junctions(const JunctionParams& p);

/// H = sum_i (-eps_i/2 sz_i - delta_i/2 sx_i) + sum_{i<j} C_ij sz_i sz_j  (8x8, real symmetric).
Operator build_hamiltonian(const SystemParams& p);

/// sz1 sz2 + sz1 sz3 + sz2 sz3.
Operator coupling_operator();

/// sx (x) sx (x) sx: flips every spin.
Operator spin_flip_operator();

}  // namespace fluxtri
