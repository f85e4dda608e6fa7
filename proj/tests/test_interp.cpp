#include "pronyif/interp.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pronyif;

TEST(MonotoneCubic, ReproducesLinearData) {
  Eigen::VectorXd x(6), y(6);
  x << 0.0, 1.0, 2.5, 3.0, 7.0, 8.0;
  y = 3.0 * x.array() - 2.0;
  const MonotoneCubic f(x, y);
  for (double t = -1.0; t <= 9.0; t += 0.01) {
    const double clamped = std::clamp(t, 0.0, 8.0);
    EXPECT_NEAR(f(t), 3.0 * clamped - 2.0, 1e-12);
  }
}

TEST(MonotoneCubic, PassesThroughKnots) {
  Eigen::VectorXd x(5), y(5);
  x << 0, 1, 2, 3, 4;
  y << 1, -2, 5, 5, 0;
  const MonotoneCubic f(x, y);
  for (int i = 0; i < 5; ++i) EXPECT_DOUBLE_EQ(f(x[i]), y[i]);
}

TEST(MonotoneCubic, NoOvershootOnMonotoneData) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> step(0.01, 3.0);
  std::bernoulli_distribution flat(0.2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 12;
    Eigen::VectorXd x(n), y(n);
    x[0] = 0.0;
    y[0] = 0.0;
    const double dir = trial % 2 ? 1.0 : -1.0;
    for (int i = 1; i < n; ++i) {
      x[i] = x[i - 1] + step(rng);
      y[i] = y[i - 1] + (flat(rng) ? 0.0 : dir * step(rng) * step(rng));
    }
    const MonotoneCubic f(x, y);
    double prev = f(x[0]);
    for (int i = 1; i <= 2000; ++i) {
      const double t = x[n - 1] * i / 2000.0;
      const double v = f(t);
      EXPECT_GE(dir * (v - prev), -1e-12) << "trial " << trial;
      prev = v;
    }
    for (int i = 0; i + 1 < n; ++i) {
      const double lo = std::min(y[i], y[i + 1]), hi = std::max(y[i], y[i + 1]);
      for (int j = 0; j <= 50; ++j) {
        const double v = f(x[i] + (x[i + 1] - x[i]) * j / 50.0);
        EXPECT_GE(v, lo - 1e-12);
        EXPECT_LE(v, hi + 1e-12);
      }
    }
  }
}

TEST(MonotoneCubic, SingleKnotAndErrors) {
  const MonotoneCubic one(Eigen::VectorXd::Constant(1, 2.0), Eigen::VectorXd::Constant(1, 5.0));
  EXPECT_EQ(one(-3.0), 5.0);
  EXPECT_EQ(one(10.0), 5.0);
  Eigen::VectorXd x(3), y(2);
  x << 0, 1, 2;
  y << 0, 1;
  EXPECT_THROW(MonotoneCubic(x, y), std::invalid_argument);
  Eigen::VectorXd xs(2), ys(2);
  xs << 1, 1;
  ys << 0, 1;
  EXPECT_THROW(MonotoneCubic(xs, ys), std::invalid_argument);
  EXPECT_THROW(MonotoneCubic(Eigen::VectorXd(), Eigen::VectorXd()), std::invalid_argument);
}

TEST(MonotoneCubic, VectorEvaluation) {
  Eigen::VectorXd x(3), y(3);
  x << 0, 1, 2;
  y << 0, 1, 4;
  const MonotoneCubic f(x, y);
  const Eigen::VectorXd xs = Eigen::VectorXd::LinSpaced(9, -0.5, 2.5);
  const Eigen::VectorXd ys = f(xs);
  for (Eigen::Index i = 0; i < xs.size(); ++i) EXPECT_EQ(ys[i], f(xs[i]));
}
