#include <gtest/gtest.h>

#include <numbers>

#include "fluxtri/qmath.hpp"
#include "test_support.hpp"

using namespace fluxtri;

namespace {

Operator brute_kron(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// rho_A(i, j) = sum_k psi(i k) conj(psi(j k)) for a split into the first qubit and the rest.
Operator brute_first_qubit(const PureState& s) {
  const Eigen::Index rest = s.dim() / 2;
  Operator rho = Operator::Zero(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (Eigen::Index k = 0; k < rest; ++k) rho(i, j) += s[i * rest + k] * std::conj(s[j * rest + k]);
  return rho;
}

}  // namespace

TEST(PureState, RejectsBadInput) {
  EXPECT_THROW(PureState(Amplitudes::Ones(3)), std::invalid_argument);
  EXPECT_THROW(PureState(Amplitudes::Ones(4)), std::invalid_argument);
  EXPECT_THROW(PureState::normalized(Amplitudes::Zero(4)), std::invalid_argument);
  EXPECT_THROW(PureState::basis("uxd"), std::invalid_argument);
  EXPECT_NO_THROW(PureState::normalized(Amplitudes::Ones(8)));
}

TEST(PureState, BasisIndexing) {
  EXPECT_EQ(PureState::basis("uuu")[0], Complex(1.0));
  EXPECT_EQ(PureState::basis("uud")[1], Complex(1.0));
  EXPECT_EQ(PureState::basis("duu")[4], Complex(1.0));
  EXPECT_EQ(PureState::basis("ddd")[7], Complex(1.0));
  EXPECT_EQ(PureState::basis("ud").qubits(), 2);
}

TEST(Direction, ValidatesNorm) {
  EXPECT_THROW(Direction(Vec3(1, 1, 0)), std::invalid_argument);
  const Direction d = Direction::spherical(std::numbers::pi / 2, std::numbers::pi / 2);
  EXPECT_NEAR(d[0], 0.0, 1e-15);
  EXPECT_NEAR(d[1], 1.0, 1e-15);
  EXPECT_NEAR(d[2], 0.0, 1e-15);
}

TEST(Pauli, Algebra) {
  const Complex i(0, 1);
  EXPECT_TRUE((pauli_x() * pauli_y()).isApprox(i * pauli_z(), 1e-15));
  EXPECT_TRUE((pauli_y() * pauli_z()).isApprox(i * pauli_x(), 1e-15));
  EXPECT_TRUE((pauli_x() * pauli_x()).isApprox(identity2(), 1e-15));
  EXPECT_EQ(pauli_z()(0, 0), Complex(1.0));  // |u> is the +1 eigenstate
}

TEST(Kron, MatchesElementwiseDefinition) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const Operator a = support::random_hermitian(rng, 2);
    const Operator b = support::random_hermitian(rng, 4);
    EXPECT_LT((kron(a, b) - brute_kron(a, b)).norm(), 1e-14);
  }
  const Operator x = pauli_x(), z = pauli_z();
  EXPECT_LT((kron_all({x, z, x}) - brute_kron(brute_kron(x, z), x)).norm(), 1e-15);
  EXPECT_THROW(kron_all(std::span<const Operator>{}), std::invalid_argument);
  EXPECT_THROW(kron_all({Operator::Ones(2, 3)}), std::invalid_argument);
}

TEST(Kron, OnQubitActsOnTheRightFactor) {
  const Operator z2 = on_qubit(pauli_z(), 2, 3);
  for (int idx = 0; idx < 8; ++idx) {
    const double expected = (idx & 2) ? -1.0 : 1.0;
    EXPECT_EQ(z2(idx, idx), Complex(expected));
  }
}

TEST(HermitianEigensystem, ReconstructsAndFixesPhase) {
  std::mt19937_64 rng(11);
  const Operator h = support::random_hermitian(rng, 8);
  const auto es = hermitian_eigensystem(h);
  const Operator back = es.vectors * es.values.asDiagonal() * es.vectors.adjoint();
  EXPECT_LT((back - h).norm(), 1e-12);
  for (Eigen::Index k = 1; k < es.values.size(); ++k) EXPECT_LE(es.values[k - 1], es.values[k]);
  for (Eigen::Index k = 0; k < 8; ++k) {
    Eigen::Index pivot;
    es.vectors.col(k).cwiseAbs().maxCoeff(&pivot);
    EXPECT_NEAR(es.vectors(pivot, k).imag(), 0.0, 1e-12);
    EXPECT_GT(es.vectors(pivot, k).real(), 0.0);
  }
  EXPECT_THROW(hermitian_eigensystem(Operator::Ones(2, 2) * Complex(0, 1)), std::invalid_argument);
}

TEST(PartialTrace, MatchesIndexSum) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const PureState s = support::random_state(rng, 3);
    EXPECT_LT((partial_trace(s, {1}) - brute_first_qubit(s)).norm(), 1e-14);
    EXPECT_NEAR(partial_trace(s, {2, 3}).trace().real(), 1.0, 1e-14);
  }
  EXPECT_THROW(partial_trace(PureState::basis("uu"), {}), std::invalid_argument);
  EXPECT_THROW(partial_trace(PureState::basis("uu"), {1, 2}), std::invalid_argument);
  EXPECT_THROW(partial_trace(PureState::basis("uu"), {3}), std::invalid_argument);
}

TEST(PartialTrace, ProductStateFactors) {
  std::mt19937_64 rng(5);
  const Eigen::Vector2cd a = support::random_amplitudes(rng, 2);
  const Eigen::Vector2cd b = support::random_amplitudes(rng, 2);
  const Eigen::Vector2cd c = support::random_amplitudes(rng, 2);
  const std::vector<Eigen::Vector2cd> f{a, b, c};
  const PureState s = product_state(f);
  EXPECT_LT((partial_trace(s, {2}) - b * b.adjoint()).norm(), 1e-14);
}

TEST(Rotation, ClosedForm) {
  const double t = 0.73;
  for (int axis = 0; axis < 3; ++axis) {
    const Eigen::Matrix2cd sigma = axis == 0 ? pauli_x() : axis == 1 ? pauli_y() : pauli_z();
    const Eigen::Matrix2cd expected =
        std::cos(t / 2) * identity2() - Complex(0, std::sin(t / 2)) * sigma;
    EXPECT_LT((rotation(axis, t) - expected).norm(), 1e-15);
    EXPECT_TRUE(is_unitary(rotation(axis, t)));
  }
}

TEST(Expectation, SpinAlongDirection) {
  EXPECT_NEAR(expectation(PureState::basis("u"), pauli_z()), 1.0, 1e-15);
  EXPECT_NEAR(expectation(PureState::basis("d"), pauli_z()), -1.0, 1e-15);
  const PureState plus = PureState::normalized(Amplitudes::Ones(2));
  EXPECT_NEAR(expectation(plus, spin_operator(Direction::x())), 1.0, 1e-15);
  EXPECT_THROW(expectation(plus, Operator::Identity(4, 4)), std::invalid_argument);
}
