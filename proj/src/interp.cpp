#include "pronyif/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pronyif {

MonotoneCubic::MonotoneCubic(Eigen::VectorXd knots, Eigen::VectorXd values)
    : knots_(std::move(knots)), values_(std::move(values)) {
  const Eigen::Index n = knots_.size();
  if (n < 1 || values_.size() != n) {
    throw std::invalid_argument("MonotoneCubic: knots and values must be non-empty and equally sized");
  }
  for (Eigen::Index i = 1; i < n; ++i) {
    if (!(knots_[i] > knots_[i - 1])) throw std::invalid_argument("MonotoneCubic: knots must increase");
  }
  tangents_ = Eigen::VectorXd::Zero(n);
  if (n == 1) return;

  Eigen::VectorXd secant(n - 1);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    secant[i] = (values_[i + 1] - values_[i]) / (knots_[i + 1] - knots_[i]);
  }
  tangents_[0] = secant[0];
  tangents_[n - 1] = secant[n - 2];
  for (Eigen::Index i = 1; i + 1 < n; ++i) {
    tangents_[i] = secant[i - 1] * secant[i] <= 0.0 ? 0.0 : 0.5 * (secant[i - 1] + secant[i]);
  }
  // Fritsch-Carlson limiter: keep (alpha, beta) inside the circle of radius 3.
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    if (secant[i] == 0.0) {
      tangents_[i] = 0.0;
      tangents_[i + 1] = 0.0;
      continue;
    }
    const double alpha = tangents_[i] / secant[i];
    const double beta = tangents_[i + 1] / secant[i];
    if (alpha < 0.0) tangents_[i] = 0.0;
    if (beta < 0.0) tangents_[i + 1] = 0.0;
    const double radius2 = alpha * alpha + beta * beta;
    if (radius2 > 9.0) {
      const double tau = 3.0 / std::sqrt(radius2);
      tangents_[i] = tau * alpha * secant[i];
      tangents_[i + 1] = tau * beta * secant[i];
    }
  }
}

double MonotoneCubic::operator()(double x) const {
  const Eigen::Index n = knots_.size();
  if (n == 1 || x <= knots_[0]) return values_[0];
  if (x >= knots_[n - 1]) return values_[n - 1];
  const auto* begin = knots_.data();
  const auto i = static_cast<Eigen::Index>(std::upper_bound(begin, begin + n, x) - begin) - 1;
  const double h = knots_[i + 1] - knots_[i];
  const double s = (x - knots_[i]) / h;
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
  const double h10 = s3 - 2.0 * s2 + s;
  const double h01 = -2.0 * s3 + 3.0 * s2;
  const double h11 = s3 - s2;
  return h00 * values_[i] + h10 * h * tangents_[i] + h01 * values_[i + 1] + h11 * h * tangents_[i + 1];
}

Eigen::VectorXd MonotoneCubic::operator()(const Eigen::Ref<const Eigen::VectorXd>& xs) const {
  Eigen::VectorXd out(xs.size());
  for (Eigen::Index i = 0; i < xs.size(); ++i) out[i] = (*this)(xs[i]);
  return out;
}

}  // namespace pronyif
