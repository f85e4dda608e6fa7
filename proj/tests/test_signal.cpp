#include "pronyif/signal.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace pronyif;

TEST(Synthesize, ZeroFrequencyToneIsConstant) {
  const auto s = synthesize({ModeSpec::tone(1.0, 0.0)}, 8.0, 4);
  ASSERT_EQ(s.size(), 4);
  for (Eigen::Index n = 0; n < 4; ++n) {
    EXPECT_NEAR(s.samples[n].real(), 1.0, 1e-15);
    EXPECT_NEAR(s.samples[n].imag(), 0.0, 1e-15);
  }
}

TEST(Synthesize, QuarterRateRotation) {
  const auto s = synthesize({ModeSpec::tone(2.0, 2.0)}, 8.0, 4);
  const std::complex<double> expected[] = {{2, 0}, {0, 2}, {-2, 0}, {0, -2}};
  for (int n = 0; n < 4; ++n) EXPECT_LT(std::abs(s.samples[n] - expected[n]), 1e-14);
}

TEST(Synthesize, TwoToneEnvelope) {
  const double fs = 1000.0, w1 = 100.0, w2 = 113.0;
  const auto s = synthesize({ModeSpec::tone(1.0, w1), ModeSpec::tone(1.0, w2)}, fs, 500);
  for (Eigen::Index n = 0; n < s.size(); ++n) {
    const double t = static_cast<double>(n) / fs;
    EXPECT_NEAR(std::abs(s.samples[n]), std::abs(2.0 * std::cos(std::numbers::pi * (w2 - w1) * t)), 1e-12);
  }
}

TEST(Synthesize, Linearity) {
  const std::vector<ModeSpec> a{ModeSpec::tone(1.5, 120.0), ModeSpec::chirp(0.7, 50.0, 30.0)};
  const std::vector<ModeSpec> b{ModeSpec::sinusoidal_fm(2.0, 200.0, 20.0, 3.0)};
  std::vector<ModeSpec> ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  const auto sa = synthesize(a, 1024.0, 2048);
  const auto sb = synthesize(b, 1024.0, 2048);
  const auto sab = synthesize(ab, 1024.0, 2048);
  const double scale = sab.samples.cwiseAbs().maxCoeff();
  EXPECT_LE((sab.samples - sa.samples - sb.samples).cwiseAbs().maxCoeff(), 1e-12 * scale);
}

TEST(Synthesize, RejectsBadSpecs) {
  EXPECT_THROW(synthesize({}, 100.0, 10), std::invalid_argument);
  EXPECT_THROW(synthesize({ModeSpec::tone(0.0, 10.0)}, 100.0, 10), InvalidModeSpec);
  EXPECT_THROW(synthesize({ModeSpec::tone(-1.0, 10.0)}, 100.0, 10), InvalidModeSpec);
  EXPECT_THROW(synthesize({ModeSpec::tone(1.0, -5.0)}, 100.0, 10), InvalidModeSpec);
  // IF of the chirp reaches 10 - 30 t < 0 before the end of the signal.
  EXPECT_THROW(synthesize({ModeSpec::chirp(1.0, 10.0, -30.0)}, 100.0, 100), InvalidModeSpec);
  // FM dips to 5 - 10 < 0.
  EXPECT_THROW(synthesize({ModeSpec::sinusoidal_fm(1.0, 5.0, 10.0, 1.0)}, 100.0, 100), InvalidModeSpec);
  EXPECT_THROW(synthesize({ModeSpec::tone(1.0, 10.0)}, 0.0, 10), std::invalid_argument);
  EXPECT_THROW(synthesize({ModeSpec::tone(1.0, 10.0)}, 100.0, 0), std::invalid_argument);
}

TEST(Synthesize, ChirpIfStaysPositiveOnShortSupport) {
  // 10 - 30 t stays positive for t < 1/3.
  EXPECT_NO_THROW(synthesize({ModeSpec::chirp(1.0, 10.0, -30.0)}, 100.0, 30));
}

TEST(TrueIf, Examples) {
  EXPECT_DOUBLE_EQ(true_if(ModeSpec::tone(1.0, 100.0), 0.37), 100.0);
  EXPECT_DOUBLE_EQ(true_if(ModeSpec::chirp(1.0, 50.0, 20.0), 1.0), 70.0);
  EXPECT_NEAR(true_if(ModeSpec::sinusoidal_fm(1.0, 100.0, 10.0, 2.0), 0.125), 110.0, 1e-12);
}

TEST(TrueIf, MatchesPhaseFiniteDifference) {
  const std::vector<ModeSpec> specs{ModeSpec::tone(1.0, 100.0), ModeSpec::chirp(1.0, 50.0, 20.0),
                                    ModeSpec::sinusoidal_fm(1.0, 100.0, 10.0, 2.0)};
  const long double h = 1e-6L;
  for (const auto& spec : specs) {
    for (double t : {0.1, 0.125, 0.4, 0.77}) {
      // The phase is reduced mod 1; the step is far below one cycle.
      long double d = phase_cycles(spec, t + h) - phase_cycles(spec, t - h);
      d -= std::round(d);
      const double fd = static_cast<double>(d / (2 * h));
      EXPECT_NEAR(fd, true_if(spec, t), 1e-6 * true_if(spec, t)) << to_string(spec.kind) << " t=" << t;
    }
  }
}

TEST(TrueIf, SeriesMatchesPointwise) {
  const auto spec = ModeSpec::sinusoidal_fm(1.0, 180.0, 30.0, 1.0);
  const auto series = true_if_series(spec, 1024.0, 64);
  for (Eigen::Index n = 0; n < 64; ++n) EXPECT_DOUBLE_EQ(series[n], true_if(spec, static_cast<double>(n) / 1024.0));
}

TEST(ModeKind, RoundTripNames) {
  for (auto k : {ModeKind::PureTone, ModeKind::LinearChirp, ModeKind::SinusoidalFM}) {
    EXPECT_EQ(mode_kind_from_string(to_string(k)), k);
  }
  EXPECT_EQ(mode_kind_from_string("tone"), ModeKind::PureTone);
  EXPECT_THROW(mode_kind_from_string("square"), InvalidModeSpec);
}

TEST(Signal, ValidateRejectsNonFinite) {
  Signal s;
  s.sampling_rate = 10.0;
  s.samples = Eigen::VectorXcd::Ones(4);
  EXPECT_NO_THROW(validate(s));
  s.samples[2] = std::complex<double>(std::nan(""), 0.0);
  EXPECT_THROW(validate(s), std::invalid_argument);
  s.samples.resize(0);
  EXPECT_THROW(validate(s), std::invalid_argument);
}
