#pragma once

#include <span>
#include <vector>

namespace grandnet {

/// A piece of a profile: value a + b/t on [lo, hi).
struct ProfileSegment {
  double lo = 0.0;
  double hi = 0.0;
  double a = 0.0;
  double b = 0.0;

  double operator()(double t) const { return a + b / t; }
  bool is_step() const { return b == 0.0; }
};

/// Nonnegative, nonincreasing function of t on (0,1), piecewise of the form
/// a + b/t. Step functions (f*, enumerable-net averages) have b = 0 everywhere;
/// f** and the full-net average have one a + b/t piece per cell (or less).
/// The profile is zero beyond its last segment.
class Profile {
 public:
  Profile() = default;
  /// Segments must be contiguous from 0 and the segment touching 0 must be a step.
  explicit Profile(std::vector<ProfileSegment> segments);

  std::span<const ProfileSegment> segments() const { return segs_; }
  std::span<const double> log_lo() const { return log_lo_; }
  std::span<const double> log_hi() const { return log_hi_; }

  /// Right-continuous value at t > 0.
  double operator()(double t) const;
  double support_end() const { return segs_.empty() ? 0.0 : segs_.back().hi; }
  bool is_zero() const { return segs_.empty(); }
  bool is_step() const;
  /// Upper ends of the segments.
  std::vector<double> breakpoints() const;

  /// Profile scaled by c >= 0.
  Profile scaled(double c) const;

 private:
  std::vector<ProfileSegment> segs_;
  std::vector<double> log_lo_;
  std::vector<double> log_hi_;
};

struct QuadratureOptions {
  int order = 16;
  /// Gauss-Legendre panels per non-step segment. Only used when no closed form applies.
  int subdivisions = 2;
};

/// Integral over (0,1) of (t^s phi(t))^q dt/t, q finite. Returns +inf when divergent.
double lorentz_integral(const Profile& phi, double s, double q, const QuadratureOptions& quad = {});

/// sup over 0 < t < 1 of t^s phi(t), s >= 0.
double lorentz_sup(const Profile& phi, double s);

/// Integral over (0,1) of phi(t) psi(t) dt, exact.
double pairing_integral(const Profile& phi, const Profile& psi);

}  // namespace grandnet
