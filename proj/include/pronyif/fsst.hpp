#pragma once

#include "pronyif/stft.hpp"

#include <Eigen/Dense>

namespace pronyif {

using MaskMatrix = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

// Local instantaneous frequency on the STFT grid. Cells with |V| <= gamma
// are invalid and hold NaN.
struct LifField {
  Eigen::MatrixXd frequency;
  MaskMatrix valid;
  StftParams params;
  double gamma = 0.0;
};

// gamma = ratio * max |V|
double relative_threshold(const ComplexTF& transform, double ratio = 1e-3);

// omega_hat[n,k] = k F_s / K - Im(Vdh / Vh) / (2 pi) where |Vh| > gamma.
LifField lif(const ComplexTF& transform, const ComplexTF& derivative_transform, double gamma);

// Reassigns |V[n,k]| of each valid cell to bin round(omega_hat K / F_s),
// clipped to [0, K-1]. Invalid cells contribute nothing.
RealTF fsst(const ComplexTF& transform, const LifField& field);

}  // namespace pronyif
