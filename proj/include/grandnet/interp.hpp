#pragma once

#include <optional>
#include <vector>

#include "grandnet/grid.hpp"
#include "grandnet/norms.hpp"

namespace grandnet {

enum class DecompositionFamily { Truncation, Scaling };

struct KFuncConfig {
  /// Truncation levels; empty means `lambda_points` log-spaced over the range of |f|.
  std::vector<double> lambda_grid;
  int lambda_points = 64;
  /// Output grid for K curves; empty means `t_points` log-spaced over [t_min, t_max].
  std::vector<double> t_grid;
  int t_points = 256;
  double t_min = 1e-6;
  double t_max = 1e6;
  int scaling_points = 33;
  std::vector<DecompositionFamily> families{DecompositionFamily::Truncation, DecompositionFamily::Scaling};
  EpsilonSearch search{};

  void validate() const;
  std::vector<double> resolved_lambda_grid(const GridFunction& f) const;
  std::vector<double> resolved_t_grid() const;
};

/// Interpolation exponents (eta, q) and the two endpoint spaces.
struct InterpParams {
  double eta = 0.5;
  double q = 2.0;
  SpaceParams endpoint0{};
  SpaceParams endpoint1{};
  /// Optional explicit target p; must satisfy 1/p = (1-eta)/p0 + eta/p1.
  std::optional<double> p;

  void validate() const;
  double target_p() const;
};

/// Upper envelope data for K(t, f; X0, X1): every decomposition f = f0 + f1 in
/// the configured families contributes the affine map t -> |f0|_0 + t |f1|_1.
struct KFunctionalBound {
  struct Line {
    double intercept;  // |f0|_{X0}
    double slope;      // |f1|_{X1}
  };
  std::vector<Line> lines;
  double norm0 = 0.0;  // |f|_{X0}
  double norm1 = 0.0;  // |f|_{X1}
  bool infinite = false;

  /// Upper bound on K(t); always <= min(norm0, t * norm1).
  double operator()(double t) const;
  /// Lower envelope restricted to the lines that attain it, ordered by decreasing slope,
  /// with breakpoints[i] the switch from lines[i] to lines[i+1].
  std::vector<Line> envelope(std::vector<double>* breakpoints) const;
};

KFunctionalBound k_functional_bound(const GridFunction& f, const SpaceParams& p0, const SpaceParams& p1,
                                    const Net& net, const KFuncConfig& cfg = {});

double k_functional_upper(const GridFunction& f, double t, const SpaceParams& p0, const SpaceParams& p1,
                          const Net& net, const KFuncConfig& cfg = {});

/// (int (t^-eta K(t))^q dt/t)^(1/q) of a bound, over (0, inf) and over (0, 1).
struct InterpolationNorm {
  double value = 0.0;
  double unit_window = 0.0;
  bool infinite = false;
};

InterpolationNorm interpolation_norm_of_bound(const KFunctionalBound& bound, double eta, double q);

InterpolationNorm interpolation_norm_upper(const GridFunction& f, const InterpParams& params, const Net& net,
                                           const KFuncConfig& cfg = {});

struct EmbeddingReport {
  double p = 0.0;               // target exponent
  double lhs = 0.0;             // |f|_{GN^theta_{p,q}}
  double rhs_upper = 0.0;       // interpolation norm bound over (0, inf)
  double rhs_upper_unit = 0.0;  // same over (0, 1)
  double ratio = 0.0;           // lhs / rhs_upper, 0 for f = 0
};

EmbeddingReport check_interpolation_embedding(const GridFunction& f, const InterpParams& params, const Net& net,
                                              const KFuncConfig& cfg = {});

}  // namespace grandnet
