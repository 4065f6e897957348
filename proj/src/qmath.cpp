#include "fluxtri/qmath.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fluxtri {

namespace {

bool valid_register_length(Eigen::Index n) { return n == 2 || n == 4 || n == 8; }

}  // namespace

PureState::PureState(Amplitudes amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (!valid_register_length(amplitudes_.size())) {
    throw std::invalid_argument("PureState: length must be 2, 4 or 8, got " +
                                std::to_string(amplitudes_.size()));
  }
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("PureState: amplitudes are not normalized");
  }
}

PureState PureState::normalized(Amplitudes amplitudes) {
  const double n = amplitudes.norm();
  if (n == 0.0) throw std::invalid_argument("PureState: zero vector");
  amplitudes /= n;
  return PureState(std::move(amplitudes));
}

PureState PureState::basis(std::string_view spins) {
  const auto n = static_cast<int>(spins.size());
  if (n < 1 || n > 3) throw std::invalid_argument("PureState::basis: 1 to 3 spins expected");
  Eigen::Index index = 0;
  for (char c : spins) {
    if (c != 'u' && c != 'd') {
      throw std::invalid_argument("PureState::basis: spins must be 'u' or 'd'");
    }
    index = 2 * index + (c == 'd' ? 1 : 0);
  }
  Amplitudes a = Amplitudes::Zero(Eigen::Index{1} << n);
  a[index] = 1.0;
  return PureState(std::move(a));
}

int PureState::qubits() const {
  return std::countr_zero(static_cast<unsigned>(amplitudes_.size()));
}

Direction::Direction(const Vec3& n) : n_(n) {
  if (!n.allFinite() || std::abs(n.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("Direction: vector is not a unit vector");
  }
}

Direction Direction::spherical(double theta, double phi) {
  return Direction(Vec3(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                        std::cos(theta)));
}

const Eigen::Matrix2cd& pauli_x() {
  static const Eigen::Matrix2cd m = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
  return m;
}

const Eigen::Matrix2cd& pauli_y() {
  static const Eigen::Matrix2cd m =
      (Eigen::Matrix2cd() << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  return m;
}

const Eigen::Matrix2cd& pauli_z() {
  static const Eigen::Matrix2cd m = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
  return m;
}

const Eigen::Matrix2cd& identity2() {
  static const Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
  return m;
}

Operator spin_operator(const Vec3& n) { return spin_operator(Direction(n)); }

Operator spin_operator(const Direction& n) {
  return n[0] * pauli_x() + n[1] * pauli_y() + n[2] * pauli_z();
}

Operator kron(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Operator kron_all(std::span<const Operator> factors) {
  if (factors.empty()) throw std::invalid_argument("kron_all: empty factor list");
  for (const auto& f : factors) {
    if (f.rows() != f.cols()) throw std::invalid_argument("kron_all: factor is not square");
  }
  Operator out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
  return out;
}

Operator kron_all(std::initializer_list<Operator> factors) {
  return kron_all(std::span<const Operator>(factors.begin(), factors.size()));
}

Operator on_qubit(const Operator& single, int qubit, int n_qubits) {
  if (qubit < 1 || qubit > n_qubits) throw std::invalid_argument("on_qubit: qubit out of range");
  std::vector<Operator> factors(static_cast<std::size_t>(n_qubits), identity2());
  factors[static_cast<std::size_t>(qubit - 1)] = single;
  return kron_all(factors);
}

EigenSystem hermitian_eigensystem(const Operator& m) {
  if (m.rows() != m.cols() || !is_hermitian(m)) {
    throw std::invalid_argument("hermitian_eigensystem: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Operator> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigensystem: eigensolver did not converge");
  }
  EigenSystem es{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index k = 0; k < es.vectors.cols(); ++k) {
    auto col = es.vectors.col(k);
    Eigen::Index pivot = 0;
    for (Eigen::Index i = 1; i < col.size(); ++i) {
      if (std::abs(col[i]) > std::abs(col[pivot]) + 1e-12) pivot = i;
    }
    col *= std::conj(col[pivot]) / std::abs(col[pivot]);
  }
  return es;
}

Operator partial_trace(const PureState& state, std::span<const int> keep) {
  const int n = state.qubits();
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (kept.empty() || static_cast<int>(kept.size()) >= n) {
    throw std::invalid_argument("partial_trace: keep set must be a non-empty proper subset");
  }
  for (int q : kept) {
    if (q < 1 || q > n) throw std::invalid_argument("partial_trace: qubit out of range");
  }
  std::vector<int> traced;
  for (int q = 1; q <= n; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }
  // Bit position of qubit q inside a full basis index (qubit 1 is most significant).
  auto bit = [n](int q) { return n - q; };
  auto compose = [&](int kept_index, int traced_index) {
    int full = 0;
    for (std::size_t k = 0; k < kept.size(); ++k) {
      const int b = (kept_index >> (kept.size() - 1 - k)) & 1;
      full |= b << bit(kept[k]);
    }
    for (std::size_t k = 0; k < traced.size(); ++k) {
      const int b = (traced_index >> (traced.size() - 1 - k)) & 1;
      full |= b << bit(traced[k]);
    }
    return full;
  };
  const int dk = 1 << kept.size();
  const int dt = 1 << traced.size();
  const auto& a = state.amplitudes();
  Operator rho = Operator::Zero(dk, dk);
  for (int i = 0; i < dk; ++i) {
    for (int j = 0; j < dk; ++j) {
      Complex sum = 0.0;
      for (int t = 0; t < dt; ++t) sum += a[compose(i, t)] * std::conj(a[compose(j, t)]);
      rho(i, j) = sum;
    }
  }
  return rho;
}

Operator partial_trace(const PureState& state, std::initializer_list<int> keep) {
  return partial_trace(state, std::span<const int>(keep.begin(), keep.size()));
}

double expectation(const PureState& state, const Operator& m) {
  if (m.rows() != state.dim() || m.cols() != state.dim()) {
    throw std::invalid_argument("expectation: dimension mismatch");
  }
  const auto& a = state.amplitudes();
  return a.dot(m * a).real();
}

Eigen::Matrix2cd rotation(int axis, double theta) {
  const Eigen::Matrix2cd* sigma = nullptr;
  switch (axis) {
    case 0: sigma = &pauli_x(); break;
    case 1: sigma = &pauli_y(); break;
    case 2: sigma = &pauli_z(); break;
    default: throw std::invalid_argument("rotation: axis must be 0, 1 or 2");
  }
  return std::cos(theta / 2) * identity2() - Complex(0, std::sin(theta / 2)) * (*sigma);
}

bool is_hermitian(const Operator& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Operator& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const Operator id = Operator::Identity(m.rows(), m.cols());
  return (m.adjoint() * m - id).cwiseAbs().maxCoeff() <= tol;
}

double overlap(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("overlap: dimension mismatch");
  return std::abs(a.amplitudes().dot(b.amplitudes()));
}

PureState product_state(std::span<const Eigen::Vector2cd> factors) {
  if (factors.empty()) throw std::invalid_argument("product_state: no factors");
  Amplitudes out = factors.front().normalized();
  for (std::size_t k = 1; k < factors.size(); ++k) {
    const Eigen::Vector2cd f = factors[k].normalized();
    Amplitudes next(out.size() * 2);
    for (Eigen::Index i = 0; i < out.size(); ++i) {
      next[2 * i] = out[i] * f[0];
      next[2 * i + 1] = out[i] * f[1];
    }
    out = std::move(next);
  }
  return PureState::normalized(std::move(out));
}

}  // namespace fluxtri
