#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "fracrsv/error.hpp"
#include "fracrsv/grid.hpp"
#include "fracrsv/weights.hpp"

using namespace fracrsv;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

template <class F>
void expect_error(ErrorKind kind, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

}  // namespace

TEST(Grid, TwoPointGrid) {
  const auto g = make_grid(1.0, 1.0, 2);
  ASSERT_EQ(g.n_points(), 2u);
  EXPECT_EQ(g.node(0), 0.0);
  EXPECT_EQ(g.node(1), 1.0);
  EXPECT_EQ(g.step(), 1.0);
}

TEST(Grid, PaperDiscretisation) {
  const auto g = make_grid(0.995, 5.0, 400);
  EXPECT_DOUBLE_EQ(g.step(), 5.0 / 399.0);
  EXPECT_EQ(g.nodes().back(), 5.0);
  EXPECT_EQ(g.alpha(), 0.995);
}

TEST(Grid, EqualSpacing) {
  const auto g = make_grid(0.5, 2.0, 5);
  const std::vector<double> expected{0.0, 0.5, 1.0, 1.5, 2.0};
  EXPECT_EQ(g.nodes(), expected);
}

TEST(Grid, RejectsBadInput) {
  expect_error(ErrorKind::InvalidOrder, [] { make_grid(0.0, 1.0, 10); });
  expect_error(ErrorKind::InvalidOrder, [] { make_grid(1.2, 1.0, 10); });
  expect_error(ErrorKind::InvalidOrder, [] { make_grid(std::nan(""), 1.0, 10); });
  expect_error(ErrorKind::InvalidGrid, [] { make_grid(0.5, 0.0, 10); });
  expect_error(ErrorKind::InvalidGrid, [] { make_grid(0.5, -1.0, 10); });
  expect_error(ErrorKind::InvalidGrid, [] { make_grid(0.5, 1.0, 1); });
}

TEST(Grid, NodesMatchIndexTimesStep) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> alpha(0.01, 1.0), tf(0.1, 50.0);
  std::uniform_int_distribution<std::size_t> n(2, 5000);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = make_grid(alpha(rng), tf(rng), n(rng));
    for (std::size_t j = 0; j < g.n_points(); ++j) {
      const double want = static_cast<double>(j) * g.step();
      EXPECT_LE(std::abs(g.node(j) - want), 4 * kEps * want) << "j=" << j;
      if (j > 0) EXPECT_GT(g.node(j), g.node(j - 1));
    }
  }
}

TEST(Grid, RefinementAlignsNodes) {
  const auto coarse = make_grid(0.9, 5.0, 400);
  const auto fine = refine_grid(coarse, 4);
  ASSERT_EQ(fine.n_points(), 399u * 4 + 1);
  for (std::size_t j = 0; j < coarse.n_points(); ++j) EXPECT_NEAR(fine.node(4 * j), coarse.node(j), 1e-14);
}

TEST(RectWeights, AlphaOneIsClassicalEuler) {
  const auto b = rect_weights(1.0, 4);
  ASSERT_EQ(b.size(), 4u);
  for (std::size_t k = 1; k <= 4; ++k) EXPECT_EQ(b[k], 1.0);
}

TEST(RectWeights, HalfOrder) {
  const auto b = rect_weights(0.5, 2);
  EXPECT_EQ(b[1], 1.0);
  EXPECT_NEAR(b[2], 0.41421356237309515, 1e-16);
}

TEST(RectWeights, TelescopingSum) {
  const auto b = rect_weights(0.5, 9);
  double sum = 0.0;
  for (std::size_t k = 1; k <= 9; ++k) sum += b[k];
  EXPECT_EQ(sum, 3.0);
}

TEST(RectWeights, PartialSumsAreExactPowers) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> alpha(1e-3, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double a = trial == 0 ? 1.0 : alpha(rng);
    const auto b = rect_weights(a, 3000);
    double sum = 0.0;
    for (std::size_t m = 1; m <= b.size(); ++m) {
      sum += b[m];
      const double want = std::pow(static_cast<double>(m), a);
      ASSERT_LE(std::abs(sum - want), 8 * kEps * want) << "alpha=" << a << " m=" << m;
    }
  }
}

TEST(RectWeights, PositiveAndNonIncreasing) {
  for (double a : {0.05, 0.3, 0.7, 0.995, 1.0}) {
    const auto b = rect_weights(a, 20000);
    for (std::size_t k = 1; k <= b.size(); ++k) {
      ASSERT_GT(b[k], 0.0);
      if (k > 1) ASSERT_LE(b[k], b[k - 1]) << "alpha=" << a << " k=" << k;
    }
  }
}

TEST(RectWeights, RejectsBadOrder) {
  expect_error(ErrorKind::InvalidOrder, [] { rect_weights(0.0, 3); });
  expect_error(ErrorKind::InvalidOrder, [] { rect_weights(1.5, 3); });
}

TEST(TrapWeights, AlphaOneIsTrapezoid) {
  const auto a = trap_weights(1.0, 3);
  for (std::size_t k = 1; k <= 3; ++k) EXPECT_EQ(a[k], 2.0);
  // also beyond the series threshold
  const auto big = trap_weights(1.0, 5000);
  for (std::size_t k = 1; k <= big.size(); ++k) ASSERT_EQ(big[k], 2.0) << k;
}

TEST(TrapWeights, HalfOrderFirstWeight) {
  const auto a = trap_weights(0.5, 1);
  EXPECT_NEAR(a[1], 0.8284271247461903, 1e-15);
}

TEST(TrapWeights, HeadAtFirstStep) {
  EXPECT_EQ(trap_weights(1.0, 4).head(1), 1.0);
  // head(1) = 0 - (-a) * 1 = a
  EXPECT_NEAR(trap_weights(0.3, 4).head(1), 0.3, 1e-16);
}

TEST(TrapWeights, SeriesMatchesClosedFormNearThreshold) {
  for (double a : {0.1, 0.5, 0.8, 0.995}) {
    const auto w = trap_weights(a, 64);
    for (std::size_t k = 32; k <= 64; ++k)
      EXPECT_NEAR(w[k], trap_weight_direct(a, k), 1e-11 * w[k]) << "alpha=" << a << " k=" << k;
  }
}

TEST(TrapWeights, SeriesMatchesLongDoubleAtLargeLag) {
  // Independent route: the second difference via log1p/expm1 in extended precision.
  for (double a : {0.1, 0.5, 0.995}) {
    const auto w = trap_weights(a, 200000);
    for (std::size_t k : {100u, 1000u, 10000u, 200000u}) {
      const long double p = a + 1.0L, x = 1.0L / k;
      const long double up = std::expm1(p * std::log1p(x));
      const long double down = std::expm1(p * std::log1p(-x));
      const long double want = std::pow(static_cast<long double>(k), p) * (up + down);
      EXPECT_NEAR(w[k], static_cast<double>(want), 1e-8 * w[k]) << "alpha=" << a << " k=" << k;
    }
  }
}

TEST(TrapWeights, FiniteAndPositiveUpToOneMillion) {
  for (double a : {0.01, 0.5, 0.995, 1.0}) {
    const auto w = trap_weights(a, 1000000);
    for (std::size_t k = 1; k <= w.size(); ++k) ASSERT_TRUE(std::isfinite(w[k]) && w[k] > 0.0) << a << " " << k;
    const auto b = rect_weights(a, 1000000);
    for (std::size_t k = 1; k <= b.size(); ++k) ASSERT_TRUE(std::isfinite(b[k]) && b[k] > 0.0) << a << " " << k;
  }
}

TEST(GammaContract, ClosedFormsOnOneToThree) {
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  EXPECT_NEAR(std::tgamma(1.0), 1.0, 1e-12);
  EXPECT_NEAR(std::tgamma(1.5), sqrt_pi / 2.0, 1e-12 * sqrt_pi / 2.0);
  EXPECT_NEAR(std::tgamma(2.0), 1.0, 1e-12);
  EXPECT_NEAR(std::tgamma(2.5), 0.75 * sqrt_pi, 1e-12 * 0.75 * sqrt_pi);
  EXPECT_NEAR(std::tgamma(3.0), 2.0, 2e-12);
}
