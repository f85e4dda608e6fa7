#include "pronyif/ridge.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace pronyif {

std::vector<Eigen::Index> extract_lmf(const Eigen::Ref<const Eigen::VectorXd>& slice) {
  std::vector<Eigen::Index> peaks;
  for (Eigen::Index k = 1; k + 1 < slice.size(); ++k) {
    if (slice[k] > slice[k - 1] && slice[k] >= slice[k + 1]) peaks.push_back(k);
  }
  std::stable_sort(peaks.begin(), peaks.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return slice[a] > slice[b]; });
  return peaks;
}

RidgeSet extract_ridges(const RealTF& tf, int count, Eigen::Index max_jump) {
  if (count < 1) throw std::invalid_argument("extract_ridges: ridge count must be at least one");
  if (max_jump < 0) throw std::invalid_argument("extract_ridges: negative modulation bound");

  const Eigen::Index n_times = tf.times();
  const Eigen::Index k_bins = tf.bins();
  std::vector<std::vector<Eigen::Index>> lmf(static_cast<std::size_t>(n_times));
  for (Eigen::Index n = 0; n < n_times; ++n) {
    const Eigen::VectorXd row = tf.values.row(n).transpose();
    lmf[static_cast<std::size_t>(n)] = extract_lmf(row);
  }
  MaskMatrix claimed = MaskMatrix::Constant(n_times, k_bins, false);

  // Largest unclaimed LMF at row n within [lo, hi]; lists are already sorted
  // by decreasing value with ties resolved towards the lower bin.
  const auto best_in_band = [&](Eigen::Index n, Eigen::Index lo, Eigen::Index hi) -> Eigen::Index {
    for (Eigen::Index k : lmf[static_cast<std::size_t>(n)]) {
      if (k >= lo && k <= hi && !claimed(n, k)) return k;
    }
    return -1;
  };

  RidgeSet out;
  for (int p = 0; p < count; ++p) {
    Eigen::Index seed_n = -1;
    Eigen::Index seed_k = -1;
    double seed_value = 0.0;
    for (Eigen::Index n = 0; n < n_times; ++n) {
      const Eigen::Index k = best_in_band(n, 0, k_bins - 1);
      if (k < 0) continue;
      const double v = tf.values(n, k);
      if (v > seed_value || (v == seed_value && seed_n >= 0 && k < seed_k)) {
        seed_value = v;
        seed_n = n;
        seed_k = k;
      }
    }
    if (seed_n < 0) {
      out.incomplete = true;
      break;
    }

    Ridge ridge;
    ridge.params = tf.params;
    ridge.bins.assign(static_cast<std::size_t>(n_times), seed_k);
    ridge.linked.assign(static_cast<std::size_t>(n_times), false);
    ridge.linked[static_cast<std::size_t>(seed_n)] = true;

    for (int direction : {+1, -1}) {
      Eigen::Index previous = seed_k;
      for (Eigen::Index n = seed_n + direction; n >= 0 && n < n_times; n += direction) {
        const Eigen::Index k = best_in_band(n, previous - max_jump, previous + max_jump);
        if (k >= 0) {
          previous = k;
          ridge.linked[static_cast<std::size_t>(n)] = true;
        }
        ridge.bins[static_cast<std::size_t>(n)] = previous;
      }
    }

    for (Eigen::Index n = 0; n < n_times; ++n) {
      if (!ridge.linked[static_cast<std::size_t>(n)]) continue;
      const Eigen::Index k = ridge.bins[static_cast<std::size_t>(n)];
      const Eigen::Index lo = std::max<Eigen::Index>(0, k - max_jump);
      const Eigen::Index hi = std::min<Eigen::Index>(k_bins - 1, k + max_jump);
      claimed.row(n).segment(lo, hi - lo + 1).setConstant(true);
    }
    out.ridges.push_back(std::move(ridge));
  }
  return out;
}

IfEstimate ridge_estimate(const Ridge& ridge, int mode_id) {
  IfEstimate out;
  out.mode_id = mode_id;
  out.frequency.resize(ridge.size());
  out.amplitude = Eigen::VectorXd::Constant(ridge.size(), std::numeric_limits<double>::quiet_NaN());
  out.interpolated.resize(ridge.bins.size());
  for (Eigen::Index n = 0; n < ridge.size(); ++n) {
    out.frequency[n] = ridge.frequency(n);
    out.interpolated[static_cast<std::size_t>(n)] = !ridge.linked[static_cast<std::size_t>(n)];
  }
  return out;
}

IfEstimate off_grid_refine(const Ridge& ridge, const LifField& field, int mode_id) {
  if (field.frequency.rows() != ridge.size()) {
    throw std::invalid_argument("off_grid_refine: ridge and LIF field cover different time spans");
  }
  IfEstimate out = ridge_estimate(ridge, mode_id);
  for (Eigen::Index n = 0; n < ridge.size(); ++n) {
    const Eigen::Index k = ridge.bins[static_cast<std::size_t>(n)];
    if (field.valid(n, k)) out.frequency[n] = field.frequency(n, k);
  }
  return out;
}

}  // namespace pronyif
