#include "fluxtri/pulseprep.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fluxtri {

namespace {

double drive_norm(const DriveParams& p) {
  if (!(p.omega1 >= 0.0 && p.omega2 >= 0.0)) {
    throw std::invalid_argument("drive: Rabi frequencies must be non-negative");
  }
  const double omega = std::hypot(p.omega1, p.omega2);
  if (!(omega > 0.0)) throw std::invalid_argument("drive: zero drive amplitude");
  return omega;
}

}  // namespace

Operator reduced_hamiltonian(const DriveParams& p) {
  Operator h = Operator::Zero(3, 3);
  h(0, 1) = p.omega1;
  h(1, 0) = p.omega1;
  h(0, 2) = std::polar(p.omega2, -p.phi);
  h(2, 0) = std::conj(h(0, 2));
  return h;
}

Amplitudes evolve(const Operator& h, double t, const Amplitudes& psi0) {
  if (psi0.size() != h.rows()) throw std::invalid_argument("evolve: dimension mismatch");
  if (!is_hermitian(h)) throw std::invalid_argument("evolve: Hamiltonian is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Operator> es(h);
  const Eigen::VectorXcd phases =
      (es.eigenvalues() * Complex(0.0, -t)).array().exp().matrix();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint() * psi0;
}

double pulse_length(const DriveParams& p) { return std::numbers::pi / (2.0 * drive_norm(p)); }

Amplitudes prepare(const DriveParams& p) {
  Amplitudes start = Amplitudes::Zero(3);
  start[0] = 1.0;
  return evolve(reduced_hamiltonian(p), pulse_length(p), start);
}

Amplitudes prepared_state_closed_form(const DriveParams& p) {
  const double omega = drive_norm(p);
  Amplitudes out(3);
  out << 0.0, p.omega1 / omega, std::polar(p.omega2 / omega, p.phi);
  return out;
}

DriveParams solve_drive(std::complex<double> c1, std::complex<double> c2, double omega_scale) {
  if (std::abs(std::norm(c1) + std::norm(c2) - 1.0) > 1e-9) {
    throw std::invalid_argument("solve_drive: target is not normalized");
  }
  if (!(omega_scale > 0.0)) throw std::invalid_argument("solve_drive: omega_scale must be positive");
  DriveParams p;
  p.omega1 = omega_scale * std::abs(c1);
  p.omega2 = omega_scale * std::abs(c2);
  if (std::abs(c1) > 0.0 && std::abs(c2) > 0.0) p.phi = std::arg(c2) - std::arg(c1);
  p.t = pulse_length(p);
  return p;
}

double state_fidelity(const Amplitudes& a, const Amplitudes& b) {
  if (a.size() != b.size()) throw std::invalid_argument("state_fidelity: dimension mismatch");
  return std::abs(a.dot(b)) / (a.norm() * b.norm());
}

}  // namespace fluxtri
