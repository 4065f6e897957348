#include "fluxtri/model.hpp"

#include <cmath>
#include <stdexcept>

namespace fluxtri {

SystemParams SystemParams::identical(double eps, double delta, double coupling) {
  SystemParams p;
  p.eps = {eps, eps, eps};
  p.delta = {delta, delta, delta};
  p.coupling = Eigen::Matrix3d::Constant(coupling);
  p.coupling.diagonal().setZero();
  return p;
}

SystemParams SystemParams::with_bias(double eps) const {
  SystemParams p = *this;
  p.eps = {eps, eps, eps};
  return p;
}

bool SystemParams::identical_qubits() const {
  return eps[0] == eps[1] && eps[1] == eps[2] && delta[0] == delta[1] && delta[1] == delta[2] &&
         coupling(0, 1) == coupling(0, 2) && coupling(0, 2) == coupling(1, 2);
}

void SystemParams::validate() const {
  for (int i = 0; i < 3; ++i) {
    if (!(delta[i] > 0.0) || !std::isfinite(delta[i])) {
      throw std::invalid_argument("SystemParams: tunnel splittings must be positive");
    }
    if (!std::isfinite(eps[i])) throw std::invalid_argument("SystemParams: non-finite bias");
    if (coupling(i, i) != 0.0) {
      throw std::invalid_argument("SystemParams: coupling diagonal must be zero");
    }
  }
  if (!coupling.allFinite() || !coupling.isApprox(coupling.transpose(), 0.0)) {
    throw std::invalid_argument("SystemParams: coupling must be symmetric");
  }
}

double coupling_from_junctions(const JunctionParams& p) {
  if (!(p.alpha > 0.5)) {
    throw std::domain_error("coupling_from_junctions: alpha <= 1/2 gives no real persistent current");
  }
  if (!(p.r >= 0.0 && p.r < 1.0)) {
    throw std::invalid_argument("coupling_from_junctions: size ratio must lie in [0, 1)");
  }
  return p.r * p.e_j * (1.0 - 1.0 / (4.0 * p.alpha * p.alpha));
}

Operator build_hamiltonian(const SystemParams& p) {
  p.validate();
  Operator h = Operator::Zero(8, 8);
  for (int i = 0; i < 3; ++i) {
    h -= 0.5 * p.eps[i] * on_qubit(pauli_z(), i + 1, 3);
    h -= 0.5 * p.delta[i] * on_qubit(pauli_x(), i + 1, 3);
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      h += p.coupling(i, j) * on_qubit(pauli_z(), i + 1, 3) * on_qubit(pauli_z(), j + 1, 3);
    }
  }
  return h;
}

Operator coupling_operator() {
  const Operator z1 = on_qubit(pauli_z(), 1, 3);
  const Operator z2 = on_qubit(pauli_z(), 2, 3);
  const Operator z3 = on_qubit(pauli_z(), 3, 3);
  return z1 * z2 + z1 * z3 + z2 * z3;
}

Operator spin_flip_operator() { return kron_all({pauli_x(), pauli_x(), pauli_x()}); }

}  // namespace fluxtri
