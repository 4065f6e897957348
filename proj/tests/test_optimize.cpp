#include <gtest/gtest.h>

#include <cmath>

#include "fluxtri/optimize.hpp"

using namespace fluxtri;

TEST(NelderMead, Rosenbrock) {
  auto f = [](const std::vector<double>& x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  const auto r = nelder_mead(f, {-1.2, 1.0});
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 1.0, 1e-6);
  EXPECT_NEAR(r.x[1], 1.0, 1e-6);
  EXPECT_LT(r.value, 1e-12);
}

TEST(NelderMead, Himmelblau) {
  auto f = [](const std::vector<double>& x) {
    return std::pow(x[0] * x[0] + x[1] - 11, 2) + std::pow(x[0] + x[1] * x[1] - 7, 2);
  };
  const auto r = nelder_mead(f, {1.0, 1.0});
  EXPECT_NEAR(r.x[0], 3.0, 1e-7);
  EXPECT_NEAR(r.x[1], 2.0, 1e-7);
}

TEST(NelderMead, QuadraticInSixDimensions) {
  auto f = [](const std::vector<double>& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += (i + 1.0) * std::pow(x[i] - 0.1 * i, 2);
    return s;
  };
  const auto r = nelder_mead(f, std::vector<double>(6, 2.0));
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(r.x[i], 0.1 * i, 1e-7);
}

TEST(NelderMead, BudgetExhaustion) {
  NelderMeadOptions o;
  o.max_evaluations = 10;
  const auto r = nelder_mead([](const std::vector<double>& x) { return x[0] * x[0]; }, {5.0}, o);
  EXPECT_FALSE(r.converged);
  EXPECT_LE(r.evaluations, 12);
}

TEST(GoldenSection, Parabola) {
  const auto m = golden_section([](double x) { return (x - 0.3) * (x - 0.3) + 2.0; }, -1.0, 1.0);
  // Offset parabola is flat to machine precision within ~1.5e-8 of the vertex.
  EXPECT_NEAR(m.x, 0.3, 1e-7);
  EXPECT_NEAR(m.value, 2.0, 1e-15);
  const auto bare = golden_section([](double x) { return (x - 0.3) * (x - 0.3); }, -1.0, 1.0);
  EXPECT_NEAR(bare.x, 0.3, 1e-9);
}

TEST(BracketAndRefine, FindsGlobalGridMinimum) {
  auto f = [](double x) { return std::cos(3.0 * x) + 0.1 * x; };
  const auto m = bracket_and_refine(f, 0.0, 4.0, 201);
  // cos(3x) + 0.1x has local minima near pi/3 + 2k pi/3 offset; the smaller one is the first.
  EXPECT_NEAR(-3.0 * std::sin(3.0 * m.x) + 0.1, 0.0, 1e-7);
  EXPECT_LT(m.x, 2.0);
}

TEST(BracketAndRefine, BoundaryMinimumIsNotFound) {
  EXPECT_THROW(bracket_and_refine([](double x) { return x; }, 0.0, 1.0, 11), NotFoundError);
  EXPECT_THROW(bracket_and_refine([](double x) { return x; }, 1.0, 0.0, 11), std::invalid_argument);
}

TEST(Bisect, RootAndErrors) {
  EXPECT_NEAR(bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-13), std::sqrt(2.0), 1e-12);
  EXPECT_THROW(bisect([](double x) { return x * x + 1.0; }, -1.0, 1.0), NotFoundError);
}
