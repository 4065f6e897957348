#include "fluxtri/bell.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "fluxtri/optimize.hpp"

namespace fluxtri {

namespace {

const Eigen::Matrix2cd& pauli(int axis) {
  switch (axis) {
    case 0: return pauli_x();
    case 1: return pauli_y();
    default: return pauli_z();
  }
}

LocalFactor dir(const Direction& n) { return LocalFactor::spin(n); }

// Correlation tensor T[i...] = <sigma_i (x) sigma_j (x) ...>, flattened base 3.
std::vector<double> correlation_tensor(const PureState& state) {
  const int n = state.qubits();
  const int size = n == 2 ? 9 : 27;
  std::vector<double> t(size);
  for (int idx = 0; idx < size; ++idx) {
    std::vector<Operator> mats;
    int rest = idx;
    std::vector<int> axes(n);
    for (int q = n - 1; q >= 0; --q) {
      axes[q] = rest % 3;
      rest /= 3;
    }
    for (int q = 0; q < n; ++q) mats.push_back(pauli(axes[q]));
    t[idx] = expectation(state, kron_all(mats));
  }
  return t;
}

Vec3 unit_from_angles(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

double contract(const std::vector<double>& t, const Vec3& a, const Vec3& b) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += t[3 * i + j] * a[i] * b[j];
  return s;
}

double contract(const std::vector<double>& t, const Vec3& a, const Vec3& b, const Vec3& c) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) s += t[9 * i + 3 * j + k] * a[i] * b[j] * c[k];
  return s;
}

}  // namespace

DecomposedObservable correlation_operator(const Direction& a, const Direction& b,
                                          const Direction& c) {
  return {3, {{1.0, {dir(a), dir(b), dir(c)}}}};
}

DecomposedObservable bell_operator(const BellVectors& v) {
  if (v.qubits() != 3 || !v.c_p) throw std::invalid_argument("bell_operator: three-qubit vectors required");
  DecomposedObservable d{3, {}};
  d.settings.push_back({1.0, {dir(v.a), dir(v.b), dir(*v.c_p)}});
  d.settings.push_back({1.0, {dir(v.a), dir(v.b_p), dir(*v.c)}});
  d.settings.push_back({1.0, {dir(v.a_p), dir(v.b), dir(*v.c)}});
  d.settings.push_back({-1.0, {dir(v.a_p), dir(v.b_p), dir(*v.c_p)}});
  return d;
}

DecomposedObservable mermin_ghzbar() {
  const Direction x = Direction::x();
  const Direction z = Direction::z();
  return bell_operator({x, z, x, z, x, z});
}

DecomposedObservable chsh_operator(const BellVectors& v) {
  if (v.qubits() != 2) throw std::invalid_argument("chsh_operator: two-qubit vectors required");
  DecomposedObservable d{2, {}};
  d.settings.push_back({1.0, {dir(v.a), dir(v.b)}});
  d.settings.push_back({1.0, {dir(v.a), dir(v.b_p)}});
  d.settings.push_back({1.0, {dir(v.a_p), dir(v.b)}});
  d.settings.push_back({-1.0, {dir(v.a_p), dir(v.b_p)}});
  return d;
}

BellVectors table1_vectors() {
  const Direction u(Vec3(0.318, 0.250, 0.914).normalized());
  const Direction w(Vec3(0.635, 0.501, -0.587).normalized());
  const Direction w_neg(Vec3(-0.635, -0.501, -0.587).normalized());
  return {u, w_neg, w, u, w, u};
}

DecomposedObservable mermin_wbar() {
  const auto f = local_W_factors();
  return conjugate_local(bell_operator(table1_vectors()), f);
}

BellVectors singlet_chsh_vectors() {
  const double r = 1.0 / std::sqrt(2.0);
  return {Direction::z(), Direction::x(), Direction(Vec3(-r, 0, -r)), Direction(Vec3(r, 0, -r)),
          std::nullopt, std::nullopt};
}

BellResult optimize_bell(const PureState& state, int n_qubits, int starts, std::uint64_t seed) {
  if (n_qubits != 2 && n_qubits != 3) throw std::invalid_argument("optimize_bell: n_qubits must be 2 or 3");
  if (state.qubits() != n_qubits) throw std::invalid_argument("optimize_bell: qubit count mismatch");
  if (starts < 1) throw std::invalid_argument("optimize_bell: starts must be positive");

  const std::vector<double> t = correlation_tensor(state);
  const int n_vectors = 2 * n_qubits;
  // Angle layout: a, a', b, b', c, c' each as (theta, phi).
  auto value = [&](const std::vector<double>& x) {
    std::array<Vec3, 6> v;
    for (int k = 0; k < n_vectors; ++k) v[k] = unit_from_angles(x[2 * k], x[2 * k + 1]);
    if (n_qubits == 2) {
      return contract(t, v[0], v[2]) + contract(t, v[0], v[3]) + contract(t, v[1], v[2]) -
             contract(t, v[1], v[3]);
    }
    return contract(t, v[0], v[2], v[5]) + contract(t, v[0], v[3], v[4]) +
           contract(t, v[1], v[2], v[4]) - contract(t, v[1], v[3], v[5]);
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> polar(0.0, std::numbers::pi);
  std::uniform_real_distribution<double> azimuth(0.0, 2 * std::numbers::pi);
  NelderMeadOptions options;
  options.diameter_tol = 1e-9;

  std::vector<double> best_x;
  double best = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < starts; ++s) {
    std::vector<double> x0(2 * n_vectors);
    for (int k = 0; k < n_vectors; ++k) {
      x0[2 * k] = polar(rng);
      x0[2 * k + 1] = azimuth(rng);
    }
    const auto r = nelder_mead([&](const std::vector<double>& x) { return -value(x); }, x0, options);
    if (-r.value > best) {
      best = -r.value;
      best_x = r.x;
    }
  }

  auto direction = [&](int k) { return Direction(unit_from_angles(best_x[2 * k], best_x[2 * k + 1])); };
  BellResult result{{direction(0), direction(1), direction(2), direction(3), std::nullopt, std::nullopt},
                    best, starts, seed};
  if (n_qubits == 3) {
    result.vectors.c = direction(4);
    result.vectors.c_p = direction(5);
  }
  return result;
}

}  // namespace fluxtri
