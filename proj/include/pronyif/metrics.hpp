#pragma once

#include "pronyif/estimate.hpp"

#include <Eigen/Dense>

#include <vector>

namespace pronyif {

// Half-open range of time indices [begin, end).
struct SampleRange {
  Eigen::Index begin = 0;
  Eigen::Index end = 0;

  Eigen::Index size() const { return end - begin; }
};

// Times n / F_s in [4 sigma, N / F_s - 4 sigma].
SampleRange interior_range(Eigen::Index samples, double sigma, double sampling_rate);

struct ErrorReport {
  int mode_id = 0;
  double rmse = 0.0;
  Eigen::Index count = 0;
  Eigen::VectorXd residual;  // truth - estimate on the scored range
};

// sqrt(mean((truth[n] - estimate[n])^2)) over n in range.
ErrorReport estimation_error(const Eigen::Ref<const Eigen::VectorXd>& estimate,
                             const Eigen::Ref<const Eigen::VectorXd>& truth, SampleRange range);

ErrorReport estimation_error(const Eigen::Ref<const Eigen::VectorXd>& estimate,
                             const Eigen::Ref<const Eigen::VectorXd>& truth);

// For each true IF series, the index of the estimate with the smallest mean
// |difference| over `range`. Estimates are matched one-to-one while enough
// remain; once they run out, the nearest one is reused. -1 if there are none.
std::vector<int> match_estimates(const std::vector<IfEstimate>& estimates,
                                 const std::vector<Eigen::VectorXd>& truths, SampleRange range);

// Closed-form Gaussian-window spectrogram of A e^{i 2 pi w1 t} + e^{i 2 pi w2 t}.
double two_tone_spectrogram(double t, double eta, double amplitude, double w1, double w2, double sigma);

// Amplitude of the interference Gaussian centred on (w1 + w2) / 2 without the
// sigma^2 prefactor: 2 A exp(-pi sigma^2 dw^2 / 2).
double interference_amplitude(double amplitude, double w1, double w2, double sigma);

// sigma* = 1 / (sqrt(pi / 2) dw). Below it the two ridges merge at the
// times where the interference term is maximal.
double separability_sigma(double frequency_gap);

}  // namespace pronyif
