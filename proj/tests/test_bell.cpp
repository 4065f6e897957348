#include <gtest/gtest.h>

#include "fluxtri/bell.hpp"
#include "fluxtri/spectrum.hpp"
#include "test_support.hpp"

using namespace fluxtri;

namespace {

const double kTsirelson = 2.0 * std::sqrt(2.0);

BellVectors random_vectors(std::mt19937_64& rng, int qubits) {
  BellVectors v{support::random_direction(rng), support::random_direction(rng),
                support::random_direction(rng), support::random_direction(rng), std::nullopt,
                std::nullopt};
  if (qubits == 3) {
    v.c = support::random_direction(rng);
    v.c_p = support::random_direction(rng);
  }
  return v;
}

PureState locally_rotated(const PureState& s, std::mt19937_64& rng) {
  const Operator u = kron_all({support::random_unitary(rng), support::random_unitary(rng),
                               support::random_unitary(rng)});
  return PureState::normalized(u * s.amplitudes());
}

}  // namespace

TEST(Correlation, BasisExamples) {
  const Direction z = Direction::z(), x = Direction::x();
  EXPECT_NEAR(expectation(PureState::basis("uuu"), correlation_operator(z, z, z)), 1.0, 1e-15);
  EXPECT_NEAR(expectation(canonical_state(CanonicalState::GHZ), correlation_operator(x, x, x)), 1.0,
              1e-15);
  EXPECT_NEAR(expectation(canonical_state(CanonicalState::W), correlation_operator(z, z, z)), -1.0,
              1e-15);
  EXPECT_EQ(correlation_operator(z, z, z).settings.size(), 1u);
}

TEST(BellOperator, Structure) {
  const Direction z = Direction::z();
  const BellVectors all_z{z, z, z, z, z, z};
  const auto m = bell_operator(all_z);
  ASSERT_EQ(m.settings.size(), 4u);
  EXPECT_EQ(m.settings[3].weight, -1.0);
  EXPECT_NEAR(expectation(PureState::basis("uuu"), m), 2.0, 1e-15);
  EXPECT_THROW(bell_operator({z, z, z, z, std::nullopt, std::nullopt}), std::invalid_argument);
  EXPECT_THROW(chsh_operator(all_z), std::invalid_argument);
}

TEST(BellOperator, AssembledEqualsSettingSum) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const auto m = bell_operator(random_vectors(rng, 3));
    const PureState s = support::random_state(rng, 3);
    EXPECT_NEAR(expectation(s, m), expectation(s, assemble(m)), 1e-12);
  }
}

TEST(BellOperator, ProductStatesObeyLocalBound) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    EXPECT_LE(std::abs(expectation(support::random_product_state(rng, 3),
                                   bell_operator(random_vectors(rng, 3)))),
              2.0 + 1e-9);
    EXPECT_LE(std::abs(expectation(support::random_product_state(rng, 2),
                                   chsh_operator(random_vectors(rng, 2)))),
              2.0 + 1e-9);
  }
}

TEST(MerminGhzbar, Values) {
  const auto m = mermin_ghzbar();
  EXPECT_NEAR(expectation(canonical_state(CanonicalState::GHZbar), m), 4.0, 1e-12);
  EXPECT_NEAR(expectation(PureState::basis("uuu"), m), -1.0, 1e-12);
  const auto e2 = solve_branches(SystemParams::working_point(-2.6)).branch(2);
  EXPECT_GT(expectation(e2, m), 2.0);
}

TEST(Chsh, SingletOptimum) {
  const auto m = chsh_operator(singlet_chsh_vectors());
  EXPECT_NEAR(expectation(canonical_state(CanonicalState::BellSinglet), m), kTsirelson, 1e-12);
  const auto es = hermitian_eigensystem(assemble(m));
  EXPECT_NEAR(es.values.cwiseAbs().maxCoeff(), kTsirelson, 1e-12);
  const Direction z = Direction::z();
  EXPECT_NEAR(expectation(PureState::basis("uu"), chsh_operator({z, z, z, z, std::nullopt, std::nullopt})),
              2.0, 1e-15);
}

TEST(Table1, TransformedOperatorMatchesWState) {
  const auto m_w = bell_operator(table1_vectors());
  const double on_w = expectation(canonical_state(CanonicalState::W), m_w);
  EXPECT_GT(on_w, 2.0);
  EXPECT_NEAR(expectation(canonical_state(CanonicalState::PsiMaxL), mermin_wbar()), on_w, 1e-10);
}

TEST(OptimizeBell, KnownMaxima) {
  const auto ghz = optimize_bell(canonical_state(CanonicalState::GHZ), 3);
  EXPECT_NEAR(ghz.value, 4.0, 1e-6);
  EXPECT_LE(ghz.value, 4.0 + 1e-9);
  EXPECT_EQ(ghz.starts_used, 64);
  EXPECT_EQ(ghz.seed, 42u);
  const auto singlet = optimize_bell(canonical_state(CanonicalState::BellSinglet), 2);
  EXPECT_NEAR(singlet.value, kTsirelson, 1e-6);
  EXPECT_FALSE(singlet.vectors.c.has_value());
  const PureState w = canonical_state(CanonicalState::W);
  EXPECT_GE(optimize_bell(w, 3).value, expectation(w, bell_operator(table1_vectors())) - 1e-6);
}

TEST(OptimizeBell, ReportedVectorsAttainValue) {
  const PureState w = canonical_state(CanonicalState::W);
  const auto r = optimize_bell(w, 3, 16, 5);
  EXPECT_NEAR(expectation(w, bell_operator(r.vectors)), r.value, 1e-12);
}

TEST(OptimizeBell, DeterministicAndMonotoneInStarts) {
  const PureState w = canonical_state(CanonicalState::W);
  const auto a = optimize_bell(w, 3, 8, 99);
  const auto b = optimize_bell(w, 3, 8, 99);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.vectors.a.vec(), b.vectors.a.vec());
  double previous = -1.0;
  for (int starts : {1, 2, 4, 8, 16}) {
    const double v = optimize_bell(w, 3, starts, 99).value;
    EXPECT_GE(v, previous);
    previous = v;
  }
}

TEST(OptimizeBell, LocalUnitaryInvariance) {
  std::mt19937_64 rng(14);
  for (CanonicalState k : {CanonicalState::GHZ, CanonicalState::W}) {
    const PureState s = canonical_state(k);
    const double base = optimize_bell(s, 3).value;
    for (int trial = 0; trial < 2; ++trial) {
      EXPECT_NEAR(optimize_bell(locally_rotated(s, rng), 3).value, base, 1e-6);
    }
  }
}

TEST(OptimizeBell, Validation) {
  EXPECT_THROW(optimize_bell(canonical_state(CanonicalState::GHZ), 2), std::invalid_argument);
  EXPECT_THROW(optimize_bell(canonical_state(CanonicalState::GHZ), 3, 0), std::invalid_argument);
  EXPECT_THROW(optimize_bell(canonical_state(CanonicalState::GHZ), 4), std::invalid_argument);
}
