#include "pronyif/metrics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace pronyif {

SampleRange interior_range(Eigen::Index samples, double sigma, double sampling_rate) {
  const auto margin = static_cast<Eigen::Index>(std::ceil(4.0 * sigma * sampling_rate));
  SampleRange r{margin, samples - margin};
  if (r.end <= r.begin) throw std::invalid_argument("interior_range: signal shorter than 8 sigma");
  return r;
}

ErrorReport estimation_error(const Eigen::Ref<const Eigen::VectorXd>& estimate,
                             const Eigen::Ref<const Eigen::VectorXd>& truth, SampleRange range) {
  if (estimate.size() != truth.size()) throw std::invalid_argument("estimation_error: length mismatch");
  if (range.begin < 0 || range.end > truth.size() || range.size() < 1) {
    throw std::invalid_argument("estimation_error: scored range outside the series");
  }
  ErrorReport out;
  out.count = range.size();
  out.residual = truth.segment(range.begin, range.size()) - estimate.segment(range.begin, range.size());
  out.rmse = std::sqrt(out.residual.squaredNorm() / static_cast<double>(out.count));
  return out;
}

ErrorReport estimation_error(const Eigen::Ref<const Eigen::VectorXd>& estimate,
                             const Eigen::Ref<const Eigen::VectorXd>& truth) {
  return estimation_error(estimate, truth, SampleRange{0, truth.size()});
}

std::vector<int> match_estimates(const std::vector<IfEstimate>& estimates,
                                 const std::vector<Eigen::VectorXd>& truths, SampleRange range) {
  const std::size_t n_est = estimates.size();
  const std::size_t n_true = truths.size();
  std::vector<int> out(n_true, -1);
  if (n_est == 0) return out;

  Eigen::MatrixXd cost(n_true, n_est);
  for (std::size_t p = 0; p < n_true; ++p) {
    for (std::size_t e = 0; e < n_est; ++e) {
      cost(p, e) = (truths[p].segment(range.begin, range.size()) -
                    estimates[e].frequency.segment(range.begin, range.size()))
                       .cwiseAbs()
                       .mean();
    }
  }
  // Greedy by smallest cost, one-to-one.
  std::vector<bool> used_true(n_true, false), used_est(n_est, false);
  for (std::size_t round = 0; round < std::min(n_true, n_est); ++round) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t bp = 0, be = 0;
    for (std::size_t p = 0; p < n_true; ++p) {
      if (used_true[p]) continue;
      for (std::size_t e = 0; e < n_est; ++e) {
        if (!used_est[e] && cost(p, e) < best) {
          best = cost(p, e);
          bp = p;
          be = e;
        }
      }
    }
    used_true[bp] = used_est[be] = true;
    out[bp] = static_cast<int>(be);
  }
  for (std::size_t p = 0; p < n_true; ++p) {
    if (out[p] >= 0) continue;
    Eigen::Index e = 0;
    cost.row(static_cast<Eigen::Index>(p)).minCoeff(&e);
    out[p] = static_cast<int>(e);
  }
  return out;
}

double two_tone_spectrogram(double t, double eta, double amplitude, double w1, double w2, double sigma) {
  const double pi = std::numbers::pi;
  const double s2 = sigma * sigma;
  const double d1 = eta - w1;
  const double d2 = eta - w2;
  const double modes = amplitude * amplitude * std::exp(-2.0 * pi * s2 * d1 * d1) + std::exp(-2.0 * pi * s2 * d2 * d2);
  const double cross =
      2.0 * amplitude * std::exp(-pi * s2 * (d1 * d1 + d2 * d2)) * std::cos(2.0 * pi * (w2 - w1) * t);
  return s2 * (modes + cross);
}

double interference_amplitude(double amplitude, double w1, double w2, double sigma) {
  const double dw = w2 - w1;
  return 2.0 * amplitude * std::exp(-std::numbers::pi * sigma * sigma * dw * dw / 2.0);
}

double separability_sigma(double frequency_gap) {
  if (!(frequency_gap > 0.0)) throw std::invalid_argument("separability_sigma: gap must be positive");
  return 1.0 / (std::sqrt(std::numbers::pi / 2.0) * frequency_gap);
}

}  // namespace pronyif
