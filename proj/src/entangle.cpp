#include "fluxtri/entangle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fluxtri {

namespace {

const Eigen::Matrix2cd& pauli(int axis) {
  switch (axis) {
    case 0: return pauli_x();
    case 1: return pauli_y();
    default: return pauli_z();
  }
}

Amplitudes ket(std::string_view spins) { return PureState::basis(spins).amplitudes(); }

Setting make_setting(double weight, LocalFactor a, LocalFactor b, LocalFactor c) {
  return {weight, {std::move(a), std::move(b), std::move(c)}};
}

}  // namespace

LocalFactor LocalFactor::pauli_sum(double c0, double cx, double cy, double cz) {
  LocalFactor f{c0, {}};
  const std::array<double, 3> c{cx, cy, cz};
  for (int axis = 0; axis < 3; ++axis) {
    if (c[axis] != 0.0) f.terms.push_back({c[axis], Direction(Vec3::Unit(axis))});
  }
  return f;
}

Eigen::Matrix2cd LocalFactor::matrix() const {
  Eigen::Matrix2cd m = identity * identity2();
  for (const auto& t : terms) m += t.scale * spin_operator(t.axis);
  return m;
}

DecomposedObservable DecomposedObservable::scaled(double lambda) const {
  DecomposedObservable out = *this;
  for (auto& s : out.settings) s.weight *= lambda;
  return out;
}

Operator assemble(const DecomposedObservable& d) {
  const Eigen::Index dim = Eigen::Index{1} << d.n_qubits;
  Operator out = Operator::Zero(dim, dim);
  std::vector<Operator> mats;
  for (const auto& s : d.settings) {
    if (static_cast<int>(s.factors.size()) != d.n_qubits) {
      throw std::invalid_argument("assemble: setting has the wrong number of factors");
    }
    mats.clear();
    for (const auto& f : s.factors) mats.push_back(f.matrix());
    out += s.weight * kron_all(mats);
  }
  return out;
}

double expectation(const PureState& state, const DecomposedObservable& d) {
  if (state.qubits() != d.n_qubits) {
    throw std::invalid_argument("expectation: qubit count mismatch");
  }
  double total = 0.0;
  std::vector<Operator> mats;
  for (const auto& s : d.settings) {
    mats.clear();
    for (const auto& f : s.factors) mats.push_back(f.matrix());
    total += s.weight * expectation(state, kron_all(mats));
  }
  return total;
}

DecomposedObservable conjugate_local(const DecomposedObservable& d,
                                     std::span<const Eigen::Matrix2cd> unitaries) {
  if (static_cast<int>(unitaries.size()) != d.n_qubits) {
    throw std::invalid_argument("conjugate_local: one unitary per qubit required");
  }
  DecomposedObservable out = d;
  for (auto& s : out.settings) {
    for (std::size_t q = 0; q < s.factors.size(); ++q) {
      const auto& u = unitaries[q];
      for (auto& t : s.factors[q].terms) {
        const Eigen::Matrix2cd m = u.adjoint() * spin_operator(t.axis) * u;
        Vec3 r;
        for (int i = 0; i < 3; ++i) r[i] = 0.5 * (pauli(i) * m).trace().real();
        t.axis = Direction(r.normalized());
      }
    }
  }
  return out;
}

PureState canonical_state(CanonicalState kind) {
  const double s3 = std::sqrt(3.0);
  switch (kind) {
    case CanonicalState::GHZ:
      return PureState::normalized(ket("ddd") + ket("uuu"));
    case CanonicalState::GHZbar:
      return PureState::normalized(ket("uud") + ket("udu") + ket("duu") - ket("ddd"));
    case CanonicalState::W:
      return PureState::normalized(ket("uud") + ket("udu") + ket("duu"));
    case CanonicalState::PsiMaxL: {
      const Complex a(1.0, -s3);
      const Complex b(1.0, s3);
      Amplitudes v = 2.0 * (ket("uud") + ket("ddu")) - a * (ket("udu") + ket("dud")) -
                     b * (ket("udd") + ket("duu"));
      return PureState(v / (2.0 * std::sqrt(6.0)));
    }
    case CanonicalState::BellSinglet:
      return PureState::normalized(ket("ud") - ket("du"));
  }
  throw std::invalid_argument("canonical_state: unknown kind");
}

double three_tangle(const PureState& state) {
  if (state.qubits() != 3) throw std::invalid_argument("three_tangle: three-qubit state required");
  const auto& v = state.amplitudes();
  auto a = [&](int i, int j, int k) { return v[4 * i + 2 * j + k]; };
  const Complex d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
                     a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                     a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
                     a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
  const Complex d2 =
      a(0, 0, 0) * a(1, 1, 1) *
          (a(0, 1, 1) * a(1, 0, 0) + a(1, 0, 1) * a(0, 1, 0) + a(1, 1, 0) * a(0, 0, 1)) +
      a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
      a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) +
      a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
  const Complex d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
                     a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

double global_entanglement(const PureState& state) {
  if (state.qubits() != 3) {
    throw std::invalid_argument("global_entanglement: three-qubit state required");
  }
  double purity_sum = 0.0;
  for (int q = 1; q <= 3; ++q) {
    const Operator rho = partial_trace(state, {q});
    purity_sum += (rho * rho).trace().real();
  }
  return 2.0 * (1.0 - purity_sum / 3.0);
}

Witness witness_from_state(double alpha, const PureState& target) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("witness_from_state: alpha must lie in (0, 1)");
  }
  const auto& t = target.amplitudes();
  Operator m = alpha * Operator::Identity(t.size(), t.size()) - t * t.adjoint();
  return {alpha, target, std::move(m), std::nullopt};
}

DecomposedObservable witness_decomposition(WitnessKind kind) {
  using F = LocalFactor;
  const F one = F::unit();
  const F sx = F::pauli_sum(0, 1, 0, 0);
  const F sy = F::pauli_sum(0, 0, 1, 0);
  const F sz = F::pauli_sum(0, 0, 0, 1);
  const F z_plus_x = F::pauli_sum(0, 1, 0, 1);
  const F z_minus_x = F::pauli_sum(0, -1, 0, 1);
  const double h = std::sqrt(3.0) / 2.0;

  DecomposedObservable d;
  d.n_qubits = 3;
  auto& s = d.settings;
  switch (kind) {
    case WitnessKind::Ghz1:
    case WitnessKind::Ghz2: {
      // Ghz2 is the spin-flipped counterpart: sz^(x)3 and the (sz +- sx)^(x)3 settings change sign.
      const double sign = kind == WitnessKind::Ghz1 ? 1.0 : -1.0;
      s.push_back(make_setting(10.0 / 16, one, one, one));
      s.push_back(make_setting(sign * 4.0 / 16, sz, sz, sz));
      s.push_back(make_setting(-2.0 / 16, sy, sy, one));
      s.push_back(make_setting(-2.0 / 16, sy, one, sy));
      s.push_back(make_setting(-2.0 / 16, one, sy, sy));
      s.push_back(make_setting(-sign / 16, z_plus_x, z_plus_x, z_plus_x));
      s.push_back(make_setting(-sign / 16, z_minus_x, z_minus_x, z_minus_x));
      return d;
    }
    case WitnessKind::Wbar: {
      s.push_back(make_setting(17.0 / 24, one, one, one));
      s.push_back(make_setting(-7.0 / 24, sx, sx, sx));
      s.push_back(make_setting(-3.0 / 24, sx, one, one));
      s.push_back(make_setting(-3.0 / 24, one, sx, one));
      s.push_back(make_setting(-3.0 / 24, one, one, sx));
      s.push_back(make_setting(5.0 / 24, sx, sx, one));
      s.push_back(make_setting(5.0 / 24, sx, one, sx));
      s.push_back(make_setting(5.0 / 24, one, sx, sx));
      s.push_back(make_setting(-1.0 / 24, F::pauli_sum(1, -1, 0, 1),
                               F::pauli_sum(1, -1, -h, -0.5), F::pauli_sum(1, -1, h, -0.5)));
      s.push_back(make_setting(-1.0 / 24, F::pauli_sum(1, -1, 0, -1),
                               F::pauli_sum(1, -1, h, 0.5), F::pauli_sum(1, -1, -h, 0.5)));
      s.push_back(make_setting(-1.0 / 24, F::pauli_sum(1, -1, 1, 0),
                               F::pauli_sum(1, -1, -0.5, h), F::pauli_sum(1, -1, -0.5, -h)));
      s.push_back(make_setting(-1.0 / 24, F::pauli_sum(1, -1, -1, 0),
                               F::pauli_sum(1, -1, 0.5, -h), F::pauli_sum(1, -1, 0.5, h)));
      return d;
    }
  }
  throw std::invalid_argument("witness_decomposition: unknown kind");
}

Witness witness(WitnessKind kind) {
  Witness w;
  switch (kind) {
    case WitnessKind::Ghz1:
      w = witness_from_state(kGhzWitnessAlpha, canonical_state(CanonicalState::GHZbar));
      break;
    case WitnessKind::Ghz2: {
      // R_x(pi)^(x)3 maps |GHZbar> onto the target of the flipped witness.
      const Operator r = kron_all({rotation(0, std::numbers::pi), rotation(0, std::numbers::pi),
                                   rotation(0, std::numbers::pi)});
      w = witness_from_state(kGhzWitnessAlpha,
                             PureState::normalized(r * canonical_state(CanonicalState::GHZbar).amplitudes()));
      break;
    }
    case WitnessKind::Wbar:
      w = witness_from_state(kWWitnessAlpha, canonical_state(CanonicalState::PsiMaxL));
      break;
  }
  w.decomposition = witness_decomposition(kind);
  return w;
}

std::array<Eigen::Matrix2cd, 3> local_W_factors() {
  using std::numbers::pi;
  const Complex phase = std::polar(1.0, -pi / 3);
  return {phase * rotation(1, pi / 2), rotation(2, 2 * pi / 3) * rotation(1, pi / 2),
          rotation(2, -2 * pi / 3) * rotation(1, pi / 2)};
}

Operator local_W_transform() {
  const auto f = local_W_factors();
  return kron_all({f[0], f[1], f[2]});
}

Eigen::Matrix2cd ghzbar_to_ghz_factor() {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd v;
  // Rows are <0bar| and <1bar| with |0bar> = (|u> + i|d>)/sqrt2, |1bar> = -(|u> - i|d>)/sqrt2.
  v << r, Complex(0, -r), -r, Complex(0, -r);
  return v;
}

}  // namespace fluxtri
