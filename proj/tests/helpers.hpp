#pragma once

#include "pronyif/prony.hpp"
#include "pronyif/stft.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <algorithm>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace testing_util {

struct Planted {
  std::vector<double> frequency;
  std::vector<double> amplitude;
};

// s_k = sum_q a_q sum_m c_m e^{-i 2 pi m eta_q / F_s} e^{i 2 pi m k / K}, truncated
// where c_m / c_0 < 1e-20. Independent of the library's projection code.
inline Eigen::VectorXd fourier_slice(const Planted& p, double sigma, double fs, Eigen::Index bins) {
  const double pi = std::numbers::pi;
  const double sf = sigma * fs;
  int order = 0;
  while (order < (bins - 1) / 2 && pi * (order + 1.0) * (order + 1.0) / (2.0 * sf * sf) < 46.0) ++order;
  std::vector<std::complex<double>> weight(2 * order + 1);
  for (int m = -order; m <= order; ++m) {
    const double c = std::exp(-pi * m * m / (2.0 * sf * sf)) / (std::sqrt(2.0) * sf);
    std::complex<double> l = 0.0;
    for (std::size_t q = 0; q < p.frequency.size(); ++q) {
      l += p.amplitude[q] * std::polar(1.0, -2.0 * pi * m * p.frequency[q] / fs);
    }
    weight[static_cast<std::size_t>(m + order)] = c * l;
  }
  std::vector<std::complex<double>> twiddle(static_cast<std::size_t>(bins));
  for (Eigen::Index j = 0; j < bins; ++j) {
    twiddle[static_cast<std::size_t>(j)] = std::polar(1.0, 2.0 * pi * static_cast<double>(j) / static_cast<double>(bins));
  }
  Eigen::VectorXd s(bins);
  for (Eigen::Index k = 0; k < bins; ++k) {
    std::complex<double> acc = 0.0;
    for (int m = -order; m <= order; ++m) {
      const Eigen::Index idx = ((m * k) % bins + bins) % bins;
      acc += weight[static_cast<std::size_t>(m + order)] * twiddle[static_cast<std::size_t>(idx)];
    }
    s[k] = acc.real();
  }
  return s;
}

// Periodized Gaussian sum_q a_q sum_j exp(-2 pi sigma^2 (k F_s / K - eta_q + j F_s)^2).
inline Eigen::VectorXd gaussian_slice(const Planted& p, double sigma, double fs, Eigen::Index bins) {
  const double pi = std::numbers::pi;
  Eigen::VectorXd s = Eigen::VectorXd::Zero(bins);
  for (Eigen::Index k = 0; k < bins; ++k) {
    const double eta = static_cast<double>(k) * fs / static_cast<double>(bins);
    for (std::size_t q = 0; q < p.frequency.size(); ++q) {
      for (int j = -2; j <= 2; ++j) {
        const double d = eta - p.frequency[q] + j * fs;
        s[k] += p.amplitude[q] * std::exp(-2.0 * pi * sigma * sigma * d * d);
      }
    }
  }
  return s;
}

// Q distinct frequencies in [lo, hi] at least `gap` apart, amplitudes with
// |a| in [0.1, 10] and random sign.
inline Planted random_planted(std::mt19937_64& rng, int q, double lo, double hi, double gap) {
  std::uniform_real_distribution<double> freq(lo, hi);
  std::uniform_real_distribution<double> log_amp(std::log(0.1), std::log(10.0));
  std::bernoulli_distribution negative(0.3);
  Planted p;
  while (static_cast<int>(p.frequency.size()) < q) {
    const double f = freq(rng);
    bool ok = true;
    for (double g : p.frequency) ok = ok && std::abs(f - g) >= gap;
    if (ok) p.frequency.push_back(f);
  }
  std::sort(p.frequency.begin(), p.frequency.end());
  for (int i = 0; i < q; ++i) p.amplitude.push_back((negative(rng) ? -1.0 : 1.0) * std::exp(log_amp(rng)));
  return p;
}

}  // namespace testing_util
