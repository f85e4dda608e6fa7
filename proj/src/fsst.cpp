#include "pronyif/fsst.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace pronyif {

namespace {

bool same_shape(const ComplexTF& a, const ComplexTF& b) {
  return a.values.rows() == b.values.rows() && a.values.cols() == b.values.cols();
}

}  // namespace

double relative_threshold(const ComplexTF& transform, double ratio) {
  if (transform.values.size() == 0) return 0.0;
  return ratio * transform.values.cwiseAbs().maxCoeff();
}

LifField lif(const ComplexTF& transform, const ComplexTF& derivative_transform, double gamma) {
  if (!same_shape(transform, derivative_transform)) {
    throw std::invalid_argument("lif: STFT and derivative-window STFT differ in shape");
  }
  const Eigen::Index n_times = transform.times();
  const Eigen::Index k_bins = transform.bins();

  LifField out;
  out.params = transform.params;
  out.gamma = gamma;
  out.frequency = Eigen::MatrixXd::Constant(n_times, k_bins, std::numeric_limits<double>::quiet_NaN());
  out.valid = MaskMatrix::Constant(n_times, k_bins, false);
  for (Eigen::Index k = 0; k < k_bins; ++k) {
    const double eta = transform.frequency(k);
    for (Eigen::Index n = 0; n < n_times; ++n) {
      const std::complex<double> v = transform.values(n, k);
      if (!(std::abs(v) > gamma)) continue;
      const std::complex<double> ratio = derivative_transform.values(n, k) / v;
      out.frequency(n, k) = eta - ratio.imag() / (2.0 * std::numbers::pi);
      out.valid(n, k) = true;
    }
  }
  return out;
}

RealTF fsst(const ComplexTF& transform, const LifField& field) {
  if (transform.values.rows() != field.frequency.rows() ||
      transform.values.cols() != field.frequency.cols()) {
    throw std::invalid_argument("fsst: STFT and LIF field differ in shape");
  }
  const Eigen::Index n_times = transform.times();
  const Eigen::Index k_bins = transform.bins();
  const double scale = static_cast<double>(k_bins) / transform.params.sampling_rate;

  RealTF out;
  out.params = transform.params;
  out.kind = TFKind::Fsst;
  out.values = Eigen::MatrixXd::Zero(n_times, k_bins);
  for (Eigen::Index k = 0; k < k_bins; ++k) {
    for (Eigen::Index n = 0; n < n_times; ++n) {
      if (!field.valid(n, k)) continue;
      const double target = std::round(field.frequency(n, k) * scale);
      const auto bin = static_cast<Eigen::Index>(std::clamp(target, 0.0, static_cast<double>(k_bins - 1)));
      out.values(n, bin) += std::abs(transform.values(n, k));
    }
  }
  return out;
}

}  // namespace pronyif
