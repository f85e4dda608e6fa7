#include "pronyif/experiment.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <numbers>

using namespace pronyif;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("pronyif_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

double rms_over_modes(const EstimatorRun& run) {
  double acc = 0.0;
  for (const auto& e : run.errors) acc += e.rmse * e.rmse;
  return std::sqrt(acc / static_cast<double>(run.errors.size()));
}

}  // namespace

TEST(Config, ParsesModesSweepAndProny) {
  const auto cfg = parse_config(R"({
    "name": "t", "modes": [{"kind": "tone", "amplitude": 2, "frequency": 100},
                           {"kind": "chirp", "frequency": 150, "rate": 20},
                           {"kind": "fm", "frequency": 250, "depth": 10, "rate": 2}],
    "sigma": {"min": 0.02, "max": 0.06, "steps": 3},
    "estimators": ["prony", "if-sr"],
    "prony": {"components": [2, 4], "truncation": 8},
    "ridge": {"max_jump": 5}, "fsst": {"gamma_ratio": 0.01}})");
  validate(cfg);
  ASSERT_EQ(cfg.modes.size(), 3u);
  EXPECT_EQ(cfg.modes[0].amplitude, 2.0);
  EXPECT_EQ(cfg.modes[1].kind, ModeKind::LinearChirp);
  EXPECT_EQ(cfg.modes[2].depth, 10.0);
  const auto sigmas = cfg.sigma.values();
  ASSERT_EQ(sigmas.size(), 3u);
  EXPECT_DOUBLE_EQ(sigmas[1], 0.04);
  EXPECT_EQ(cfg.estimators, (std::vector<Estimator>{Estimator::Prony, Estimator::IfSr}));
  EXPECT_EQ(cfg.prony_components, (std::vector<int>{2, 4}));
  EXPECT_EQ(cfg.prony.truncation, 8);
  EXPECT_EQ(cfg.max_jump, 5);
  EXPECT_EQ(cfg.gamma_ratio, 0.01);
}

TEST(Config, RoundTripThroughJson) {
  const auto cfg = figure3_config();
  const auto again = parse_config(config_to_json(cfg));
  EXPECT_EQ(config_to_json(again), config_to_json(cfg));
}

TEST(Config, Rejections) {
  EXPECT_THROW(parse_config(R"({"modes": [], "colour": 1})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"prony": {"order": 3}})"), ConfigError);
  EXPECT_THROW(parse_config("{ not json"), ConfigError);
  EXPECT_THROW(parse_config(R"({"modes": [{"kind": "wobble", "frequency": 3}]})"), ConfigError);
  EXPECT_THROW(validate(parse_config(R"({"modes": [{"kind": "tone", "frequency": 3}], "estimators": []})")),
               ConfigError);
  EXPECT_THROW(validate(parse_config(R"({"modes": [{"kind": "tone", "frequency": 3}], "sigma": -0.1})")),
               ConfigError);
  EXPECT_THROW(validate(ExperimentConfig{}), ConfigError);
  EXPECT_THROW(estimator_from_string("ridge"), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/pronyif.json"), ConfigError);
}

TEST(Config, SigmaText) {
  EXPECT_EQ(parse_sigma("0.05").values(), (std::vector<double>{0.05}));
  const auto v = parse_sigma("0.01:0.08:15").values();
  ASSERT_EQ(v.size(), 15u);
  EXPECT_DOUBLE_EQ(v.front(), 0.01);
  EXPECT_DOUBLE_EQ(v.back(), 0.08);
  EXPECT_THROW(parse_sigma("0.01:0.08"), ConfigError);
  EXPECT_THROW(parse_sigma("abc"), ConfigError);
  for (auto e : all_estimators()) EXPECT_EQ(estimator_from_string(to_string(e)), e);
}

TEST(Io, SignalRoundTrip) {
  const auto dir = fresh_dir("io_signal");
  const auto s = synthesize({ModeSpec::chirp(1.3, 100.1, 17.0)}, 512.0, 300);
  write_signal_csv(dir / "s.csv", s);
  const auto back = read_signal_csv(dir / "s.csv");
  EXPECT_EQ(back.sampling_rate, 512.0);
  EXPECT_EQ(back.samples, s.samples);
  write_text(dir / "bad.csv", "index,re,im\n0,1\n");
  EXPECT_THROW(read_signal_csv(dir / "bad.csv"), IoError);
  EXPECT_THROW(read_signal_csv(dir / "missing.csv"), IoError);
}

TEST(Io, TableRoundTrips) {
  const auto dir = fresh_dir("io_tables");
  const auto tf = spectrogram(stft(synthesize({ModeSpec::tone(1.0, 30.0)}, 128.0, 64), make_stft_params(0.05, 32, 128.0)));
  write_tf_csv(dir / "tf.csv", tf);
  const auto table = read_tf_csv(dir / "tf.csv");
  EXPECT_EQ(table.values, tf.values);
  EXPECT_EQ(table.frequency[3], tf.frequency(3));

  IfEstimate e;
  e.mode_id = 2;
  e.frequency = Eigen::VectorXd::LinSpaced(5, 10.0, 11.0);
  e.amplitude = Eigen::VectorXd::Constant(5, std::nan(""));
  e.interpolated = {false, true, false, false, true};
  write_estimates_csv(dir / "e.csv", {e}, 4.0);
  const auto rows = read_estimates_csv(dir / "e.csv");
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[1].frequency, e.frequency[1]);
  EXPECT_EQ(rows[1].t, 0.25);
  EXPECT_TRUE(rows[1].interpolated);
  EXPECT_TRUE(std::isnan(rows[4].amplitude));
  EXPECT_EQ(rows[4].mode_id, 2);

  const std::vector<ErrorRow> errs{{0.01, "prony", 0, 1.25e-9}, {0.08, "if-sr", 1, 0.3}};
  write_error_csv(dir / "err.csv", errs);
  const auto back = read_error_csv(dir / "err.csv");
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].rmse, 1.25e-9);
  EXPECT_EQ(back[1].estimator, "if-sr");
  EXPECT_EQ(format_number(0.1), "0.1");
}

TEST(Figure, ParallelChirpsSlopeAndModes) {
  const auto res = run_figure1b();
  const auto* run = res.find("prony", 0.04);
  ASSERT_NE(run, nullptr);
  ASSERT_EQ(run->estimates.size(), 2u);
  const auto r = interior_range(1024, 0.04, 1024.0);
  for (const auto& e : run->estimates) EXPECT_NEAR(fitted_slope(e.frequency, 1024.0, r), 100.0, 5.0);
  for (const auto& e : run->errors) EXPECT_LT(e.rmse, 5.0);
}

TEST(Figure, FmQ2ResidualSitsInGapBandAndQ3Improves) {
  const auto res = run_figure3();
  const auto* q2 = res.find("prony-q2", 0.04);
  const auto* q3 = res.find("prony-q3", 0.04);
  ASSERT_NE(q2, nullptr);
  ASSERT_NE(q3, nullptr);
  ASSERT_EQ(q2->estimates.size(), 2u);
  ASSERT_EQ(q3->estimates.size(), 2u);
  EXPECT_LT(rms_over_modes(*q3), rms_over_modes(*q2));
  const auto r = interior_range(1024, 0.04, 1024.0);
  const Eigen::VectorXd residual = q2->errors[0].residual;
  const double peak = dominant_frequency(residual, 1024.0);
  const double gap_min = 10.0;
  const double gap_limit = std::sqrt(2.0 * std::log(2.0 / 1e-3) / std::numbers::pi) / 0.04;
  EXPECT_GE(peak, gap_min);
  EXPECT_LE(peak, gap_limit);
  EXPECT_EQ(residual.size(), r.size());
  // Where the modes are far apart and nearly stationary both runs agree.
  for (Eigen::Index n = 740; n < 800; ++n) {
    for (std::size_t p = 0; p < 2; ++p) {
      EXPECT_NEAR(q2->estimates[p].frequency[n], q3->estimates[p].frequency[n], 1e-2) << n;
    }
  }
}

TEST(Figure, SweepOrdering) {
  auto cfg = figure2_config();
  cfg.sigma = parse_sigma("0.015:0.08:2");
  const auto res = run_figure2(cfg);
  const double lo = 0.015, hi = 0.08;
  for (const char* label : {"if-sr", "if-fsstr", "if-fsstr-og"}) {
    const auto* a = res.find(label, lo);
    const auto* b = res.find(label, hi);
    ASSERT_NE(a, nullptr);
    ASSERT_NE(b, nullptr);
    EXPECT_GT(rms_over_modes(*a), rms_over_modes(*b)) << label;
    EXPECT_LT(rms_over_modes(*res.find("prony", lo)), rms_over_modes(*a)) << label;
  }
  EXPECT_LT(rms_over_modes(*res.find("if-fsstr-og", hi)), rms_over_modes(*res.find("if-fsstr", hi)));
  EXPECT_LT(rms_over_modes(*res.find("prony", lo)), 1e-6);
}

TEST(Artifacts, ByteIdenticalOnRerun) {
  auto cfg = figure1a_config();
  cfg.estimators = all_estimators();
  const auto a = fresh_dir("art_a");
  const auto b = fresh_dir("art_b");
  const auto files_a = write_artifacts(run_experiment(cfg), a);
  const auto files_b = write_artifacts(run_experiment(cfg), b);
  ASSERT_EQ(files_a.size(), files_b.size());
  for (std::size_t i = 0; i < files_a.size(); ++i) {
    EXPECT_EQ(files_a[i].filename(), files_b[i].filename());
    EXPECT_EQ(read_text(files_a[i]), read_text(files_b[i])) << files_a[i];
  }
  const auto manifest = read_text(a / "manifest.json");
  EXPECT_NE(manifest.find("\"reconstruction\""), std::string::npos);
  EXPECT_TRUE(fs::exists(a / "spectrogram.csv"));
  EXPECT_TRUE(fs::exists(a / "estimates_prony.csv"));
  EXPECT_TRUE(fs::exists(a / "spectrogram_prony.svg"));
}

TEST(Artifacts, SignalFileRun) {
  const auto dir = fresh_dir("signal_file");
  write_signal_csv(dir / "in.csv", synthesize({ModeSpec::tone(1.0, 120.2), ModeSpec::tone(1.5, 300.4)}, 1024.0, 512));
  ExperimentConfig cfg;
  cfg.signal_file = (dir / "in.csv").string();
  cfg.mode_count = 2;
  cfg.bins = 256;
  cfg.sigma = parse_sigma("0.03");
  const auto res = run_experiment(cfg);
  ASSERT_EQ(res.runs.size(), 1u);
  ASSERT_EQ(res.runs[0].estimates.size(), 2u);
  EXPECT_TRUE(res.truths.empty());
  EXPECT_NEAR(res.runs[0].estimates[0].frequency[256], 120.2, 1e-3);
  EXPECT_NEAR(res.runs[0].estimates[1].frequency[256], 300.4, 1e-3);
  write_artifacts(res, dir / "out");
  const auto manifest = read_text(dir / "out" / "manifest.json");
  EXPECT_NE(manifest.find("\"custom\""), std::string::npos);
}

TEST(Helpers, DominantFrequencyAndSlope) {
  Eigen::VectorXd s(512);
  for (Eigen::Index n = 0; n < 512; ++n) s[n] = 3.0 + std::sin(2.0 * std::numbers::pi * 32.0 * n / 512.0) + 0.5 * n / 512.0;
  EXPECT_NEAR(dominant_frequency(s, 512.0), 32.0, 1.0);
  Eigen::VectorXd line = Eigen::VectorXd::LinSpaced(100, 0.0, 99.0);
  EXPECT_NEAR(fitted_slope(line * 2.0, 10.0, {0, 100}), 20.0, 1e-10);
}
