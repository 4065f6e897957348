/**
 * @file qmath.hpp
 * @brief Dense complex linear algebra on 2^n-dimensional qubit registers (n <= 3).
 *
 * Conventions used throughout the library:
 *  - qubit 1 is the leftmost (most significant) tensor factor,
 *  - |up> is basis index 0 and |down> is basis index 1, so sigma_z|up> = +|up>,
 *  - rotations are R_a(theta) = exp(-i theta sigma_a / 2).
 */
#pragma once

#include <array>
#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace fluxtri {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;
using Amplitudes = Eigen::VectorXcd;
using Vec3 = Eigen::Vector3d;

/// Absolute tolerance used by validation checks unless an operation says otherwise.
inline constexpr double kTolerance = 1e-10;

/// Normalized state vector of a register of n = 1, 2 or 3 qubits.
class PureState {
 public:
  PureState() = default;
  /// Throws std::invalid_argument unless the length is 2, 4 or 8 and the norm is 1 within 1e-12.
  explicit PureState(Amplitudes amplitudes);

  /// Normalizes before storing; throws on a zero vector or a bad length.
  static PureState normalized(Amplitudes amplitudes);
  /// Computational basis state from a spin string such as "uud" (u = up, d = down).
  static PureState basis(std::string_view spins);

  const Amplitudes& amplitudes() const { return amplitudes_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  int qubits() const;
  Complex operator[](Eigen::Index i) const { return amplitudes_[i]; }

 private:
  Amplitudes amplitudes_;
};

/// Unit direction in R^3; throws std::invalid_argument if |n| differs from 1 by more than 1e-9.
class Direction {
 public:
  explicit Direction(const Vec3& n);
  /// Unit vector from spherical angles (polar theta from +z, azimuth phi).
  static Direction spherical(double theta, double phi);
  static Direction x() { return Direction(Vec3::UnitX()); }
  static Direction y() { return Direction(Vec3::UnitY()); }
  static Direction z() { return Direction(Vec3::UnitZ()); }

  const Vec3& vec() const { return n_; }
  double operator[](int i) const { return n_[i]; }

 private:
  Vec3 n_;
};

const Eigen::Matrix2cd& pauli_x();
const Eigen::Matrix2cd& pauli_y();
const Eigen::Matrix2cd& pauli_z();
const Eigen::Matrix2cd& identity2();

/// n_x sigma_x + n_y sigma_y + n_z sigma_z.
Operator spin_operator(const Vec3& n);
Operator spin_operator(const Direction& n);

Operator kron(const Operator& a, const Operator& b);
/// Tensor product in list order. Throws on an empty list or a non-square factor.
Operator kron_all(std::span<const Operator> factors);
Operator kron_all(std::initializer_list<Operator> factors);

/// Embeds a single-qubit operator on `qubit` (1-based) of an n-qubit register.
Operator on_qubit(const Operator& single, int qubit, int n_qubits);

struct EigenSystem {
  Eigen::VectorXd values;   ///< ascending
  Eigen::MatrixXcd vectors; ///< orthonormal columns
};

/// Eigen-decomposition of a Hermitian matrix. Each eigenvector's largest-magnitude
/// component is made real and positive (first such component on ties).
EigenSystem hermitian_eigensystem(const Operator& m);

/// Reduced density matrix over the (1-based) qubits in `keep`, in increasing qubit order.
Operator partial_trace(const PureState& state, std::span<const int> keep);
Operator partial_trace(const PureState& state, std::initializer_list<int> keep);

/// <psi|M|psi>; throws on dimension mismatch.
double expectation(const PureState& state, const Operator& m);

/// exp(-i theta sigma_axis / 2) for axis 0, 1, 2 = x, y, z.
Eigen::Matrix2cd rotation(int axis, double theta);

bool is_hermitian(const Operator& m, double tol = kTolerance);
bool is_unitary(const Operator& m, double tol = kTolerance);

/// |<a|b>|
double overlap(const PureState& a, const PureState& b);

/// Tensor product of single-qubit states.
PureState product_state(std::span<const Eigen::Vector2cd> factors);

}  // namespace fluxtri
