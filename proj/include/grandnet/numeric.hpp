#pragma once

#include <cmath>
#include <limits>

#include <Eigen/Dense>

namespace grandnet {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      carry_ += (sum_ - t) + x;
    else
      carry_ += (x - t) + sum_;
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

/// Nodes and weights of a Gauss rule on its reference domain.
struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Gauss-Legendre rule on [-1, 1] with `order` nodes (Golub-Welsch). Cached per order.
const QuadratureRule& gauss_legendre(int order);

/// Integral over [lo, hi] of fn using `panels` equal panels of a Gauss-Legendre rule.
template <class Fn>
double integrate_gl(Fn&& fn, double lo, double hi, int panels = 1, int order = 16) {
  const QuadratureRule& rule = gauss_legendre(order);
  const double width = (hi - lo) / panels;
  CompensatedSum total;
  for (int k = 0; k < panels; ++k) {
    const double a = lo + k * width;
    const double half = 0.5 * width;
    const double mid = a + half;
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i)
      total += half * rule.weights(i) * fn(mid + half * rule.nodes(i));
  }
  return total.value();
}

/// (hi^x - lo^x) / x given logs of the endpoints; the x -> 0 limit is log(hi/lo).
/// A log_lo of -inf stands for lo = 0 and requires x > 0.
inline double power_span(double x, double log_lo, double log_hi) {
  if (std::isinf(log_lo)) return x > 0 ? std::exp(x * log_hi) / x : kInf;
  const double d = log_lo - log_hi;
  if (x == 0.0) return -d;
  if (std::abs(x * d) < 0.5) return -std::exp(x * log_hi) * std::expm1(x * d) / x;
  return (std::exp(x * log_hi) - std::exp(x * log_lo)) / x;
}

}  // namespace grandnet
