#pragma once

#include "pronyif/signal.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>

namespace pronyif {

// Gaussian-window STFT sampling parameters. Frequencies are on the grid
// k F_s / K, times on n / F_s.
struct StftParams {
  double sigma = 0.04;         // window width (s): h(t) = exp(-pi t^2 / sigma^2)
  Eigen::Index bins = 512;     // K
  double sampling_rate = 1024;  // F_s
  Eigen::Index radius = 0;     // window support radius R in samples

  double bin_width() const { return sampling_rate / static_cast<double>(bins); }
  double frequency(Eigen::Index k) const { return static_cast<double>(k) * bin_width(); }
};

// Truncation radius beyond which the window drops below `eps`.
Eigen::Index window_radius(double sigma, double sampling_rate, double eps = 1e-12);

// Validated parameters with R derived from sigma.
StftParams make_stft_params(double sigma, Eigen::Index bins, double sampling_rate);

void validate(const StftParams& params);

template <typename Real>
Real gaussian_window(Real t, Real sigma) {
  return std::exp(-std::numbers::pi_v<Real> * t * t / (sigma * sigma));
}

template <typename Real>
Real gaussian_window_derivative(Real t, Real sigma) {
  return -Real(2) * std::numbers::pi_v<Real> * t / (sigma * sigma) * gaussian_window(t, sigma);
}

enum class TFKind { Stft, DerivativeStft, Spectrogram, Fsst };

// Time-frequency grid: row n <-> time n / F_s, column k <-> frequency k F_s / K.
template <typename Scalar>
struct TFMatrix {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Matrix values;
  StftParams params;
  TFKind kind = TFKind::Stft;

  Eigen::Index times() const { return values.rows(); }
  Eigen::Index bins() const { return values.cols(); }
  double time(Eigen::Index n) const { return static_cast<double>(n) / params.sampling_rate; }
  double frequency(Eigen::Index k) const { return params.frequency(k); }
};

using ComplexTF = TFMatrix<std::complex<double>>;
using RealTF = TFMatrix<double>;

// V[n,k] = (1/F_s) sum_{m=-R..R} f[n+m] h(m/F_s) exp(-i 2 pi k m / K), zero-padded.
// Computed row by row with a K-point FFT after folding the windowed segment mod K.
ComplexTF stft(const Signal& signal, const StftParams& params);

// Same transform with the analytic window derivative h'(t) = -2 pi t / sigma^2 h(t).
ComplexTF stft_derivative_window(const Signal& signal, const StftParams& params);

// Direct O(N K R) summation of the same sums. Reference path for tests.
ComplexTF stft_direct(const Signal& signal, const StftParams& params, bool derivative_window = false);

RealTF spectrogram(const ComplexTF& transform);

}  // namespace pronyif
