#pragma once

#include <Eigen/Dense>

namespace pronyif {

// Monotone piecewise-cubic Hermite interpolant (Fritsch-Carlson tangents).
// Knots must be strictly increasing. Outside the knot range the end values
// are held. Linear data are reproduced exactly and monotone data never
// overshoot.
class MonotoneCubic {
 public:
  MonotoneCubic(Eigen::VectorXd knots, Eigen::VectorXd values);

  double operator()(double x) const;
  Eigen::VectorXd operator()(const Eigen::Ref<const Eigen::VectorXd>& xs) const;

  const Eigen::VectorXd& tangents() const { return tangents_; }

 private:
  Eigen::VectorXd knots_;
  Eigen::VectorXd values_;
  Eigen::VectorXd tangents_;
};

}  // namespace pronyif
