#include "pronyif/metrics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace pronyif;

namespace {

constexpr double kPi = std::numbers::pi;

IfEstimate constant_estimate(double f, Eigen::Index n) {
  IfEstimate e;
  e.frequency = Eigen::VectorXd::Constant(n, f);
  return e;
}

int count_maxima(double t, double amplitude, double w1, double w2, double sigma) {
  int maxima = 0;
  const double lo = w1 - 60.0, hi = w2 + 60.0, step = 1e-3;
  double prev2 = two_tone_spectrogram(t, lo - step, amplitude, w1, w2, sigma);
  double prev = two_tone_spectrogram(t, lo, amplitude, w1, w2, sigma);
  for (double eta = lo + step; eta <= hi; eta += step) {
    const double cur = two_tone_spectrogram(t, eta, amplitude, w1, w2, sigma);
    if (prev > prev2 && prev >= cur) ++maxima;
    prev2 = prev;
    prev = cur;
  }
  return maxima;
}

}  // namespace

TEST(Error, Examples) {
  const Eigen::VectorXd truth = Eigen::VectorXd::LinSpaced(100, 100.0, 200.0);
  EXPECT_EQ(estimation_error(truth, truth).rmse, 0.0);
  EXPECT_NEAR(estimation_error(truth.array() + 0.25, truth).rmse, 0.25, 1e-12);
  Eigen::VectorXd alt = truth;
  for (Eigen::Index n = 0; n < alt.size(); ++n) alt[n] += (n % 2 == 0) ? 0.3 : -0.3;
  EXPECT_NEAR(estimation_error(alt, truth).rmse, 0.3, 1e-12);
  const auto r = estimation_error(truth.array() + 1.0, truth, SampleRange{10, 30});
  EXPECT_EQ(r.count, 20);
  EXPECT_EQ(r.residual.size(), 20);
  EXPECT_DOUBLE_EQ(r.residual[0], -1.0);
}

TEST(Error, PermutationInvarianceAndScaling) {
  Eigen::VectorXd truth(6), est(6);
  truth << 1, 2, 3, 4, 5, 6;
  est << 1.5, 1.0, 3.3, 4.0, 4.0, 6.2;
  const double base = estimation_error(est, truth).rmse;
  Eigen::VectorXd pt(6), pe(6);
  const int perm[] = {3, 0, 5, 1, 4, 2};
  for (int i = 0; i < 6; ++i) {
    pt[i] = truth[perm[i]];
    pe[i] = est[perm[i]];
  }
  EXPECT_NEAR(estimation_error(pe, pt).rmse, base, 1e-15);
  EXPECT_NEAR(estimation_error(3.0 * est, 3.0 * truth).rmse, 3.0 * base, 1e-14);
}

TEST(Error, Rejections) {
  const Eigen::VectorXd a = Eigen::VectorXd::Zero(10);
  EXPECT_THROW(estimation_error(a, Eigen::VectorXd::Zero(9)), std::invalid_argument);
  EXPECT_THROW(estimation_error(a, a, SampleRange{-1, 5}), std::invalid_argument);
  EXPECT_THROW(estimation_error(a, a, SampleRange{5, 11}), std::invalid_argument);
  EXPECT_THROW(estimation_error(a, a, SampleRange{5, 5}), std::invalid_argument);
}

TEST(Interior, Range) {
  const auto r = interior_range(1024, 0.04, 1024.0);
  EXPECT_EQ(r.begin, 164);
  EXPECT_EQ(r.end, 1024 - 164);
  EXPECT_THROW(interior_range(100, 0.04, 1024.0), std::invalid_argument);
}

TEST(Match, OneToOneAndReuse) {
  const std::vector<Eigen::VectorXd> truths{Eigen::VectorXd::Constant(50, 300.0),
                                            Eigen::VectorXd::Constant(50, 100.0)};
  const std::vector<IfEstimate> est{constant_estimate(101.0, 50), constant_estimate(299.0, 50)};
  EXPECT_EQ(match_estimates(est, truths, {0, 50}), (std::vector<int>{1, 0}));
  const std::vector<IfEstimate> one{constant_estimate(120.0, 50)};
  EXPECT_EQ(match_estimates(one, truths, {0, 50}), (std::vector<int>{0, 0}));
  EXPECT_EQ(match_estimates({}, truths, {0, 50}), (std::vector<int>{-1, -1}));
}

TEST(TwoTone, NullTimeLeavesOnlyModes) {
  const double sigma = 0.04, w1 = 200.3, w2 = 219.1, dw = w2 - w1;
  for (int k = 0; k < 4; ++k) {
    const double t = (2.0 * k + 1.0) / (4.0 * dw);
    for (double eta : {190.0, 205.0, 209.7, 230.0}) {
      const double modes = sigma * sigma * (4.0 * std::exp(-2.0 * kPi * sigma * sigma * (eta - w1) * (eta - w1)) +
                                            std::exp(-2.0 * kPi * sigma * sigma * (eta - w2) * (eta - w2)));
      EXPECT_NEAR(two_tone_spectrogram(t, eta, 2.0, w1, w2, sigma), modes, 1e-14);
    }
  }
}

TEST(TwoTone, MidpointValue) {
  const double sigma = 0.04, w1 = 200.3, w2 = 219.1, dw = w2 - w1;
  for (double t : {0.0, 0.01, 0.1, 0.37}) {
    const double expected =
        sigma * sigma * std::exp(-kPi * sigma * sigma * dw * dw / 2.0) * (2.0 + 2.0 * std::cos(2.0 * kPi * dw * t));
    EXPECT_NEAR(two_tone_spectrogram(t, (w1 + w2) / 2.0, 1.0, w1, w2, sigma), expected, 1e-15);
  }
  EXPECT_NEAR(interference_amplitude(1.0, w1, w2, sigma), 2.0 * std::exp(-kPi * sigma * sigma * dw * dw / 2.0), 1e-15);
}

TEST(TwoTone, AmplitudeSwapSymmetry) {
  for (double a : {0.5, 2.0, 3.0}) {
    for (double t : {0.0, 0.013, 0.2}) {
      for (double eta : {150.0, 200.0, 212.0, 260.0}) {
        EXPECT_NEAR(two_tone_spectrogram(t, eta, a, 200.3, 219.1, 0.03),
                    a * a * two_tone_spectrogram(t, eta, 1.0 / a, 219.1, 200.3, 0.03), 1e-14);
      }
    }
  }
}

TEST(Separability, Threshold) {
  EXPECT_NEAR(separability_sigma(19.947), 0.04, 1e-5);
  EXPECT_LT(separability_sigma(1e6), 1e-6);
  EXPECT_GT(separability_sigma(0.1), separability_sigma(1.0));
  EXPECT_THROW(separability_sigma(0.0), std::invalid_argument);
  EXPECT_THROW(separability_sigma(-3.0), std::invalid_argument);
}

TEST(Separability, RidgesMergeBelowThresholdAtInterferencePeak) {
  for (double dw : {12.0, 19.947, 35.0}) {
    const double star = separability_sigma(dw);
    EXPECT_EQ(count_maxima(0.0, 1.0, 200.0, 200.0 + dw, 0.9 * star), 1) << dw;
    EXPECT_EQ(count_maxima(0.0, 1.0, 200.0, 200.0 + dw, 1.1 * star), 2) << dw;
  }
}

TEST(Separability, NullTimeSliceSplitsAtSmallerWidth) {
  // With the cross term gone the slice is two plain Gaussians, bimodal above sigma* / sqrt(2).
  for (double dw : {12.0, 19.947, 35.0}) {
    const double t = 1.0 / (4.0 * dw), edge = separability_sigma(dw) / std::sqrt(2.0);
    EXPECT_EQ(count_maxima(t, 1.0, 200.0, 200.0 + dw, 0.9 * edge), 1) << dw;
    EXPECT_EQ(count_maxima(t, 1.0, 200.0, 200.0 + dw, 1.1 * edge), 2) << dw;
  }
}
