#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "fluxtri/qmath.hpp"

namespace fluxtri::support {

/// Haar-random 2x2 unitary from the QR decomposition of a complex Gaussian matrix.
inline Eigen::Matrix2cd random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::Matrix2cd z;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) z(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<Eigen::Matrix2cd> qr(z);
  Eigen::Matrix2cd q = qr.householderQ();
  const Eigen::Matrix2cd r = qr.matrixQR();
  for (int j = 0; j < 2; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

inline Amplitudes random_amplitudes(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> g;
  Amplitudes v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = Complex(g(rng), g(rng));
  return v.normalized();
}

inline PureState random_state(std::mt19937_64& rng, int qubits) {
  return PureState(random_amplitudes(rng, Eigen::Index{1} << qubits));
}

inline PureState random_product_state(std::mt19937_64& rng, int qubits) {
  std::vector<Eigen::Vector2cd> f;
  for (int q = 0; q < qubits; ++q) f.push_back(random_amplitudes(rng, 2));
  return product_state(f);
}

inline Direction random_direction(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return Direction(Vec3(g(rng), g(rng), g(rng)).normalized());
}

inline Operator random_hermitian(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> g;
  Operator a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = Complex(g(rng), g(rng));
  return 0.5 * (a + a.adjoint());
}

/// |<a|b>| up to global phase for raw amplitude vectors.
inline double phase_free_overlap(const Amplitudes& a, const Amplitudes& b) {
  return std::abs(a.dot(b)) / (a.norm() * b.norm());
}

}  // namespace fluxtri::support
