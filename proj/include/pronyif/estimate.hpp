#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace pronyif {

// Per-mode IF (and IA, when the estimator provides one) on the signal's
// time grid n = 0..N-1.
struct IfEstimate {
  int mode_id = 0;
  Eigen::VectorXd frequency;
  Eigen::VectorXd amplitude;
  std::vector<bool> interpolated;

  Eigen::Index size() const { return frequency.size(); }
};

}  // namespace pronyif
