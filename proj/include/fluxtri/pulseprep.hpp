/**
 * @file pulseprep.hpp
 * @brief Resonant two-tone preparation of superpositions of a degenerate pair through a
 *        three-level V scheme.
 *
 * Level 1 is the initial state, levels 2 and 3 the degenerate pair. In the rotating frame
 * the drive couples level 1 to level 2 with Rabi frequency omega1 and to level 3 with
 * omega2 e^{-i phi}.
 */
#pragma once

#include <complex>
#include <optional>

#include "fluxtri/qmath.hpp"

namespace fluxtri {

struct DriveParams {
  double omega1 = 0.0;
  double omega2 = 0.0;
  double phi = 0.0;
  double t = 0.0;
};

/// 3x3 Hermitian matrix with zero diagonal, H(0,1) = omega1, H(0,2) = omega2 e^{-i phi}.
Operator reduced_hamiltonian(const DriveParams& p);

/// exp(-i H t) psi0 via eigendecomposition; H must be Hermitian.
Amplitudes evolve(const Operator& h, double t, const Amplitudes& psi0);

/// pi / (2 sqrt(omega1^2 + omega2^2)); throws std::invalid_argument for a zero drive.
double pulse_length(const DriveParams& p);

/// Evolves (1, 0, 0) under the reduced Hamiltonian for pulse_length(p). The duration
/// field p.t is not used. Throws std::invalid_argument for a zero drive.
Amplitudes prepare(const DriveParams& p);

/// Closed-form final state (0, omega1, omega2 e^{i phi}) / sqrt(omega1^2 + omega2^2).
Amplitudes prepared_state_closed_form(const DriveParams& p);

/// Drive producing c1 |2> + c2 |3> up to global phase, with total Rabi frequency omega_scale.
/// Throws std::invalid_argument unless |c1|^2 + |c2|^2 = 1 within 1e-9 and omega_scale > 0.
DriveParams solve_drive(std::complex<double> c1, std::complex<double> c2, double omega_scale = 1.0);

/// |<a|b>| for 3-level (or any equal-length) amplitude vectors.
double state_fidelity(const Amplitudes& a, const Amplitudes& b);

}  // namespace fluxtri
