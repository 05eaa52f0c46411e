#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace grandnet {

/// Piecewise-constant real function on [0,1] with n uniform cells.
/// Cell k is [k/n, (k+1)/n); the domain has measure exactly 1.
class GridFunction {
 public:
  explicit GridFunction(Eigen::VectorXd values);

  Eigen::Index n() const { return values_.size(); }
  const Eigen::VectorXd& values() const { return values_; }
  double operator[](Eigen::Index k) const { return values_(k); }
  double cell_width() const { return 1.0 / static_cast<double>(n()); }

  /// Integral of f over [0,1].
  double integral() const;

 private:
  Eigen::VectorXd values_;
};

GridFunction make_grid_function(std::span<const double> values);

enum class NetKind { Full, Dyadic, GridIntervals, Explicit };

/// A family of measurable subsets of [0,1]. Full is the net of all subsets of
/// positive measure and is handled analytically; the others are unions of cells.
class Net {
 public:
  static Net full() { return Net(NetKind::Full, {}); }
  static Net dyadic() { return Net(NetKind::Dyadic, {}); }
  static Net grid_intervals() { return Net(NetKind::GridIntervals, {}); }
  /// Explicit cell-index sets; duplicate indices within a set are dropped.
  static Net explicit_sets(std::vector<std::vector<int>> sets);

  NetKind kind() const { return kind_; }
  bool enumerable() const { return kind_ != NetKind::Full; }
  const std::vector<std::vector<int>>& sets() const { return sets_; }
  std::string id() const;

  /// Throws InvalidInput when the net cannot live on an n-cell grid.
  void check_resolution(Eigen::Index n) const;

 private:
  Net(NetKind kind, std::vector<std::vector<int>> sets) : kind_(kind), sets_(std::move(sets)) {}

  NetKind kind_;
  std::vector<std::vector<int>> sets_;
};

struct NetMember {
  std::size_t id = 0;
  double measure = 0.0;
  std::vector<int> cells;  // sorted, duplicate-free
};

/// Deterministic enumeration of an enumerable net on an n-cell grid.
/// Interval nets are ordered by length, then by left endpoint.
std::vector<NetMember> net_members(const Net& net, Eigen::Index n);

bool is_power_of_two(Eigen::Index n);

/// Logarithmic weight used by the closed-form equivalents:
/// Paper is |ln t|, Uniform is 1 + |ln t|.
enum class LogWeight { Paper, Uniform };

inline double log_weight_offset(LogWeight w) { return w == LogWeight::Uniform ? 1.0 : 0.0; }

const char* to_string(LogWeight w);
LogWeight parse_log_weight(const std::string& s);

/// One grand-space branch: theta, p, q in (0, inf] and the weight variant used
/// by the log-weighted equivalents.
struct SpaceParams {
  double theta = 0.0;
  double p = 2.0;
  double q = 2.0;
  LogWeight weight = LogWeight::Uniform;

  void validate() const;
  /// Hoelder conjugate p/(p-1); requires p in (1, inf).
  double conjugate_p() const;
};

double conjugate_exponent(double p);

}  // namespace grandnet
