#pragma once

#include <Eigen/Dense>

#include "grandnet/grid.hpp"
#include "grandnet/profile.hpp"

namespace grandnet {

/// Nonincreasing rearrangement f* of |f| on an n-cell grid, with the exact
/// prefix integrals needed for f**.
class Rearrangement {
 public:
  explicit Rearrangement(const GridFunction& f);

  Eigen::Index n() const { return sorted_.size(); }
  /// |f| values sorted nonincreasingly, one per cell of width 1/n.
  const Eigen::VectorXd& sorted_values() const { return sorted_; }

  /// Right-continuous step value f*(t), zero for t >= 1.
  double star(double t) const;
  /// Integral of f* over [0, t], t in [0, 1].
  double prefix_integral(double t) const;
  /// f**(t) = (1/t) * integral of f* over [0, t], t in (0, 1].
  double double_star(double t) const;

  Profile star_profile() const;
  Profile double_star_profile() const;

 private:
  Eigen::VectorXd sorted_;
  Eigen::VectorXd prefix_;  // prefix_(k) = integral of f* over [0, k/n]
};

Rearrangement decreasing_rearrangement(const GridFunction& f);

/// f**(t) for t in (0, 1]; throws OutOfDomain otherwise.
double maximal_average(const GridFunction& f, double t);

}  // namespace grandnet
