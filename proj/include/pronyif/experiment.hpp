#pragma once

#include "pronyif/estimate.hpp"
#include "pronyif/io.hpp"
#include "pronyif/metrics.hpp"
#include "pronyif/prony.hpp"
#include "pronyif/ridge.hpp"
#include "pronyif/signal.hpp"
#include "pronyif/stft.hpp"

#include <Eigen/Dense>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace pronyif {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Estimator { Prony, IfSr, IfFsstr, IfFsstrOg };

std::string to_string(Estimator e);
Estimator estimator_from_string(const std::string& name);
std::vector<Estimator> all_estimators();

struct SigmaSweep {
  double min = 0.04;
  double max = 0.04;
  int steps = 1;

  std::vector<double> values() const;
};

// "0.04" or "min:max:steps"
SigmaSweep parse_sigma(const std::string& text);

struct ExperimentConfig {
  std::string name = "custom";
  std::vector<ModeSpec> modes;
  std::string signal_file;  // used instead of `modes` when set
  int mode_count = 0;       // P; 0 means modes.size()
  double sampling_rate = 1024.0;
  Eigen::Index samples = 1024;
  Eigen::Index bins = 512;
  SigmaSweep sigma;
  std::vector<Estimator> estimators{Estimator::Prony};
  PronyConfig prony;
  std::vector<int> prony_components;  // one Prony run per entry; empty means prony.components
  Eigen::Index max_jump = 3;
  double gamma_ratio = 1e-3;
  std::string output = "out";
  bool reconstruction = false;
};

void validate(const ExperimentConfig& cfg);

// JSON on top of `base`: absent keys keep the base value.
ExperimentConfig parse_config(const std::string& json_text, ExperimentConfig base = {});
ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig base = {});
std::string config_to_json(const ExperimentConfig& cfg);

ExperimentConfig figure1a_config();
ExperimentConfig figure1b_config();
ExperimentConfig figure2_config();
ExperimentConfig figure3_config();

struct EstimatorRun {
  double sigma = 0.0;
  Estimator estimator = Estimator::Prony;
  int components = 0;  // Q for Prony runs
  std::string label;
  std::vector<IfEstimate> estimates;  // ascending mean frequency
  RidgeSet ridges;                    // ridge-based runs only
  std::vector<int> match;             // truth index -> estimate index
  std::vector<ErrorReport> errors;    // one per truth, empty without truths
  std::vector<std::string> warnings;
};

struct ExperimentResult {
  ExperimentConfig config;
  Signal signal;
  std::vector<Eigen::VectorXd> truths;
  std::vector<RealTF> spectrograms;  // one per sigma
  std::vector<EstimatorRun> runs;

  std::vector<ErrorRow> error_rows() const;
  const EstimatorRun* find(const std::string& label, double sigma) const;
};

Signal load_signal(const ExperimentConfig& cfg);

std::vector<IfEstimate> run_ridge_estimator(Estimator estimator, const Signal& signal, const StftParams& params,
                                            int count, Eigen::Index max_jump, double gamma_ratio,
                                            RidgeSet* ridges = nullptr);

// Runs every estimator at every sigma and scores against the true IF when
// the signal comes from mode specifications.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Writes signal, spectrogram (single-sigma runs), estimates, ridges, errors,
// SVG views and manifest.json into `dir`. Returns the written paths.
std::vector<std::filesystem::path> write_artifacts(const ExperimentResult& result, const std::filesystem::path& dir);

ExperimentResult run_figure1a(const ExperimentConfig& cfg = figure1a_config());
ExperimentResult run_figure1b(const ExperimentConfig& cfg = figure1b_config());
ExperimentResult run_figure2(const ExperimentConfig& cfg = figure2_config());
ExperimentResult run_figure3(const ExperimentConfig& cfg = figure3_config());
ExperimentResult run_custom(const std::filesystem::path& config_file);

// Frequency of the largest non-DC peak of the mean-removed series.
double dominant_frequency(const Eigen::Ref<const Eigen::VectorXd>& series, double sampling_rate);

// Least-squares line through (n / F_s, series[n]) over `range`; returns the slope.
double fitted_slope(const Eigen::Ref<const Eigen::VectorXd>& series, double sampling_rate, SampleRange range);

}  // namespace pronyif
