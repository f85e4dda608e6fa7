#include "pronyif/stft.hpp"

#include <unsupported/Eigen/FFT>

#include <stdexcept>

namespace pronyif {

namespace {

Eigen::VectorXd sampled_window(const StftParams& params, bool derivative) {
  const Eigen::Index r = params.radius;
  Eigen::VectorXd w(2 * r + 1);
  for (Eigen::Index m = -r; m <= r; ++m) {
    const double t = static_cast<double>(m) / params.sampling_rate;
    w[m + r] = derivative ? gaussian_window_derivative(t, params.sigma) : gaussian_window(t, params.sigma);
  }
  return w / params.sampling_rate;
}

void check_rates(const Signal& signal, const StftParams& params) {
  validate(signal);
  validate(params);
  if (signal.sampling_rate != params.sampling_rate) {
    throw std::invalid_argument("signal and STFT parameters disagree on the sampling rate");
  }
}

ComplexTF fft_transform(const Signal& signal, const StftParams& params, bool derivative) {
  check_rates(signal, params);
  const Eigen::Index n_times = signal.size();
  const Eigen::Index k_bins = params.bins;
  const Eigen::Index r = params.radius;
  const Eigen::VectorXd window = sampled_window(params, derivative);

  ComplexTF out;
  out.params = params;
  out.kind = derivative ? TFKind::DerivativeStft : TFKind::Stft;
  out.values.resize(n_times, k_bins);

  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> folded(static_cast<std::size_t>(k_bins));
  std::vector<std::complex<double>> spectrum(static_cast<std::size_t>(k_bins));
  for (Eigen::Index n = 0; n < n_times; ++n) {
    std::fill(folded.begin(), folded.end(), std::complex<double>(0.0, 0.0));
    const Eigen::Index m_lo = std::max(-r, -n);
    const Eigen::Index m_hi = std::min(r, n_times - 1 - n);
    for (Eigen::Index m = m_lo; m <= m_hi; ++m) {
      const Eigen::Index slot = ((m % k_bins) + k_bins) % k_bins;
      folded[static_cast<std::size_t>(slot)] += signal.samples[n + m] * window[m + r];
    }
    fft.fwd(spectrum, folded);
    for (Eigen::Index k = 0; k < k_bins; ++k) out.values(n, k) = spectrum[static_cast<std::size_t>(k)];
  }
  return out;
}

}  // namespace

Eigen::Index window_radius(double sigma, double sampling_rate, double eps) {
  const double r = sigma * sampling_rate * std::sqrt(std::log(1.0 / eps) / std::numbers::pi);
  return std::max<Eigen::Index>(1, static_cast<Eigen::Index>(std::ceil(r)));
}

StftParams make_stft_params(double sigma, Eigen::Index bins, double sampling_rate) {
  StftParams p;
  p.sigma = sigma;
  p.bins = bins;
  p.sampling_rate = sampling_rate;
  if (sigma > 0.0 && sampling_rate > 0.0) p.radius = window_radius(sigma, sampling_rate);
  validate(p);
  return p;
}

void validate(const StftParams& params) {
  if (!(params.sigma > 0.0)) throw std::invalid_argument("window width sigma must be positive");
  if (params.bins < 2) throw std::invalid_argument("need at least two frequency bins");
  if (!(params.sampling_rate > 0.0)) throw std::invalid_argument("sampling rate must be positive");
  if (params.radius < 1) throw std::invalid_argument("window radius must be at least one sample");
}

ComplexTF stft(const Signal& signal, const StftParams& params) {
  return fft_transform(signal, params, false);
}

ComplexTF stft_derivative_window(const Signal& signal, const StftParams& params) {
  return fft_transform(signal, params, true);
}

ComplexTF stft_direct(const Signal& signal, const StftParams& params, bool derivative_window) {
  check_rates(signal, params);
  const Eigen::Index n_times = signal.size();
  const Eigen::Index k_bins = params.bins;
  const Eigen::Index r = params.radius;
  const Eigen::VectorXd window = sampled_window(params, derivative_window);

  ComplexTF out;
  out.params = params;
  out.kind = derivative_window ? TFKind::DerivativeStft : TFKind::Stft;
  out.values = ComplexTF::Matrix::Zero(n_times, k_bins);
  for (Eigen::Index n = 0; n < n_times; ++n) {
    for (Eigen::Index k = 0; k < k_bins; ++k) {
      std::complex<double> acc(0.0, 0.0);
      for (Eigen::Index m = -r; m <= r; ++m) {
        if (n + m < 0 || n + m >= n_times) continue;
        const double angle = -2.0 * std::numbers::pi * static_cast<double>((k * m) % k_bins) /
                             static_cast<double>(k_bins);
        acc += signal.samples[n + m] * window[m + r] * std::polar(1.0, angle);
      }
      out.values(n, k) = acc;
    }
  }
  return out;
}

RealTF spectrogram(const ComplexTF& transform) {
  RealTF out;
  out.params = transform.params;
  out.kind = TFKind::Spectrogram;
  out.values = transform.values.cwiseAbs2();
  return out;
}

}  // namespace pronyif
