#include <gtest/gtest.h>

#include "fluxtri/model.hpp"
#include "fluxtri/spectrum.hpp"
#include "test_support.hpp"

using namespace fluxtri;

namespace {

// Matrix elements from the spin configurations directly: bit (2 - i) of the index is qubit i+1,
// 0 = up (sz = +1).
Operator enumerated_hamiltonian(const SystemParams& p) {
  Operator h = Operator::Zero(8, 8);
  auto spin = [](int idx, int q) { return (idx >> (2 - q)) & 1 ? -1.0 : 1.0; };
  for (int idx = 0; idx < 8; ++idx) {
    for (int q = 0; q < 3; ++q) {
      h(idx, idx) += -0.5 * p.eps[q] * spin(idx, q);
      h(idx ^ (1 << (2 - q)), idx) += -0.5 * p.delta[q];
      for (int r = q + 1; r < 3; ++r) h(idx, idx) += p.coupling(q, r) * spin(idx, q) * spin(idx, r);
    }
  }
  return h;
}

SystemParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> pos(0.2, 2.0);
  SystemParams p;
  for (int q = 0; q < 3; ++q) {
    p.eps[q] = u(rng);
    p.delta[q] = pos(rng);
  }
  for (int q = 0; q < 3; ++q)
    for (int r = q + 1; r < 3; ++r) p.coupling(q, r) = p.coupling(r, q) = u(rng);
  return p;
}

}  // namespace

TEST(Hamiltonian, MatchesBasisEnumeration) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const SystemParams p = random_params(rng);
    EXPECT_LT((build_hamiltonian(p) - enumerated_hamiltonian(p)).norm(), 1e-14);
  }
}

TEST(Hamiltonian, RealSymmetric) {
  const Operator h = build_hamiltonian(SystemParams::working_point(0.7));
  EXPECT_TRUE(is_hermitian(h, 0.0));
  EXPECT_EQ(h.imag().norm(), 0.0);
}

TEST(Hamiltonian, WorkingPointEnergiesAtZeroBias) {
  // Frustrated pairs sit at -C -+ Delta/2 when eps = 0.
  const auto s = solve(SystemParams::working_point());
  EXPECT_NEAR(s.energies[1], -1.9, 1e-12);
  EXPECT_NEAR(s.energies[2], -1.9, 1e-12);
  EXPECT_NEAR(s.energies[3], -0.9, 1e-12);
  EXPECT_NEAR(s.energies[4], -0.9, 1e-12);
}

TEST(Hamiltonian, SpinFlipSymmetry) {
  const Operator x = spin_flip_operator();
  for (double e : {-3.0, -0.4, 1.2, 5.0}) {
    const Operator h_plus = build_hamiltonian(SystemParams::working_point(e));
    const Operator h_minus = build_hamiltonian(SystemParams::working_point(-e));
    EXPECT_LT((x * h_plus * x - h_minus).norm(), 1e-12);
    EXPECT_LT((solve(SystemParams::working_point(e)).energies -
               solve(SystemParams::working_point(-e)).energies)
                  .cwiseAbs()
                  .maxCoeff(),
              1e-10);
  }
  const Operator h0 = build_hamiltonian(SystemParams::working_point());
  EXPECT_LT((x * h0 - h0 * x).norm(), 1e-12);
}

TEST(Hamiltonian, CouplingOperatorIsDiagonal) {
  const Operator c = coupling_operator();
  EXPECT_EQ(c(0, 0), Complex(3.0));
  EXPECT_EQ(c(1, 1), Complex(-1.0));
  EXPECT_LT((c - Operator(c.diagonal().asDiagonal())).norm(), 1e-15);
}

TEST(SystemParams, Validation) {
  SystemParams p = SystemParams::working_point();
  p.delta[1] = 0.0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  EXPECT_THROW(build_hamiltonian(p), std::invalid_argument);
  p = SystemParams::working_point();
  p.coupling(0, 1) = 2.0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  EXPECT_FALSE(p.identical_qubits());
  EXPECT_TRUE(SystemParams::working_point(1.0).identical_qubits());
}

TEST(Junctions, CouplingFormula) {
  EXPECT_NEAR(coupling_from_junctions({0.5, 0.8, 2.0}), 0.5 * 2.0 * (1.0 - 1.0 / 2.56), 1e-15);
  EXPECT_EQ(coupling_from_junctions({0.0, 0.8, 1.0}), 0.0);
  EXPECT_THROW(coupling_from_junctions({0.5, 0.5, 1.0}), std::domain_error);
  EXPECT_THROW(coupling_from_junctions({1.0, 0.8, 1.0}), std::invalid_argument);
  EXPECT_THROW(coupling_from_junctions({-0.1, 0.8, 1.0}), std::invalid_argument);
}
