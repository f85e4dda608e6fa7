#pragma once

#include "pronyif/estimate.hpp"
#include "pronyif/metrics.hpp"
#include "pronyif/ridge.hpp"
#include "pronyif/signal.hpp"
#include "pronyif/stft.hpp"

#include <Eigen/Dense>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace pronyif {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fixed-format number rendering shared by every CSV writer, so that
// re-running an experiment reproduces the files byte for byte.
std::string format_number(double value);

// "# sampling_rate=<Fs>" then "index,re,im".
void write_signal_csv(const std::filesystem::path& path, const Signal& signal);
Signal read_signal_csv(const std::filesystem::path& path);

// Header "n,<bin frequencies>", one row per time index.
void write_tf_csv(const std::filesystem::path& path, const RealTF& tf);

struct TfTable {
  Eigen::VectorXd frequency;
  Eigen::MatrixXd values;  // rows are time indices
};
TfTable read_tf_csv(const std::filesystem::path& path);

// ridge_id,n,k,hz,linked
void write_ridges_csv(const std::filesystem::path& path, const RidgeSet& ridges);

// n,t_seconds,mode_id,if_hz,ia,interpolated. NaN IA is written as "nan".
void write_estimates_csv(const std::filesystem::path& path, const std::vector<IfEstimate>& estimates,
                         double sampling_rate);

struct EstimateRow {
  Eigen::Index n = 0;
  double t = 0.0;
  int mode_id = 0;
  double frequency = 0.0;
  double amplitude = 0.0;
  bool interpolated = false;
};
std::vector<EstimateRow> read_estimates_csv(const std::filesystem::path& path);

struct ErrorRow {
  double sigma = 0.0;
  std::string estimator;
  int mode_id = 0;
  double rmse = 0.0;
};

// sigma,estimator,mode_id,rmse_hz
void write_error_csv(const std::filesystem::path& path, const std::vector<ErrorRow>& rows);
std::vector<ErrorRow> read_error_csv(const std::filesystem::path& path);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace pronyif
