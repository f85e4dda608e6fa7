#pragma once

#include "pronyif/estimate.hpp"
#include "pronyif/fsst.hpp"
#include "pronyif/stft.hpp"

#include <Eigen/Dense>

#include <vector>

namespace pronyif {

// A chain of local maxima along frequency, one bin per time index.
// Gaps hold the last linked bin and are marked in `linked`.
struct Ridge {
  std::vector<Eigen::Index> bins;
  std::vector<bool> linked;
  StftParams params;

  Eigen::Index size() const { return static_cast<Eigen::Index>(bins.size()); }
  double frequency(Eigen::Index n) const { return params.frequency(bins[static_cast<std::size_t>(n)]); }
};

struct RidgeSet {
  std::vector<Ridge> ridges;
  // Fewer ridges than requested could be seeded.
  bool incomplete = false;
};

// Bins with slice[k] > slice[k-1] and slice[k] >= slice[k+1], end bins
// excluded, sorted by decreasing value (lower bin first on ties).
std::vector<Eigen::Index> extract_lmf(const Eigen::Ref<const Eigen::VectorXd>& slice);

// Greedy max-energy extraction of `count` ridges. Each ridge is seeded at the
// largest unclaimed LMF and extended both ways in time, linking to the
// largest unclaimed LMF within +-max_jump bins of the previous one. Linked
// cells and a +-max_jump band around them are then claimed.
RidgeSet extract_ridges(const RealTF& tf, int count, Eigen::Index max_jump = 3);

// Piecewise-constant IF on the frequency grid (IF-SR / IF-FSSTR).
IfEstimate ridge_estimate(const Ridge& ridge, int mode_id = 0);

// IF-FSSTR-OG: omega_hat[n, k(n)] where the LIF is valid, grid value elsewhere.
IfEstimate off_grid_refine(const Ridge& ridge, const LifField& field, int mode_id = 0);

}  // namespace pronyif
