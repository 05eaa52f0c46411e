#pragma once

#include <functional>
#include <span>
#include <utility>

#include "grandnet/grid.hpp"
#include "grandnet/netavg.hpp"
#include "grandnet/profile.hpp"

namespace grandnet {

/// Controls the search over the exponent shift epsilon.
struct EpsilonSearch {
  double eps_floor = 1e-6;
  int grid_points = 512;    // log-spaced over [eps_floor, cap]
  int refine_rounds = 3;    // local optima refined by golden section
  // Target relative accuracy. Golden section runs until the bracket is
  // rel_tol * 1e-4 wide in log(eps): inf-of-sup objectives (q = inf) have
  // kinked minima where the value error is linear in the bracket width.
  double rel_tol = 1e-8;
  QuadratureOptions quad{};

  void validate() const;
};

enum class NormBranch { Classical, SupEps, InfEps, SupEpsPInf, LogWeighted };
const char* to_string(NormBranch b);

struct NormResult {
  double value = 0.0;
  bool infinite = false;
  double eps = 0.0;  // optimal shift (0 for the classical branch)
  double gap = 0.0;  // objective spread across the final golden-section bracket
  NormBranch branch = NormBranch::Classical;
};

enum class Extremum { Sup, Inf };

struct EpsilonOptimum {
  double value = 0.0;
  double eps = 0.0;
  double gap = 0.0;
};

/// Sup or inf of objective over eps in (0, cap]: dense log grid over
/// [eps_floor, cap] plus `seeds`, then golden-section refinement (in log eps)
/// of the best `refine_rounds` local optima. For Sup a +inf sample is final;
/// for Inf, +inf samples are skipped.
EpsilonOptimum optimize_epsilon(const std::function<double(double)>& objective, double cap, Extremum kind,
                                std::span<const double> seeds, const EpsilonSearch& search);

/// min(|theta| / |ln t|, cap): stationary point of eps -> eps^theta t^(1/p + eps sign theta).
double critical_epsilon(double theta, double t, double cap);

/// Classical net norm of a profile: (int_0^1 (t^(1/p) phi)^q dt/t)^(1/q), sup form for q = inf.
double profile_net_norm(const Profile& phi, double p, double q, const QuadratureOptions& quad = {});

double net_norm(const GridFunction& f, const Net& net, double p, double q, const QuadratureOptions& quad = {});

/// Grand norm of a nonincreasing profile for every theta/p/q branch. `eps_cap`
/// (when positive) restricts the shift range to (0, min(cap, eps_cap)].
NormResult grand_profile_norm(const Profile& phi, const SpaceParams& params, const EpsilonSearch& search = {},
                              double eps_cap = 0.0);

NormResult grand_net_norm(const GridFunction& f, const Net& net, const SpaceParams& params,
                          const EpsilonSearch& search = {});

enum class LorentzVariant { Star, DoubleStar };
const char* to_string(LorentzVariant v);

/// GL (Star, built on f*) or curly-GL (DoubleStar, built on f**).
NormResult grand_lorentz_norm(const GridFunction& f, const SpaceParams& params, LorentzVariant variant,
                              const EpsilonSearch& search = {});

/// Log-weighted equivalent: sup_t t^(1/p) w(t)^(-theta) phi(t) for q = inf and
/// (int_0^1 (t^(1/p) w(t)^(-theta) phi)^q dt/t)^(1/q) otherwise, w(t) = |ln t|
/// (paper) or 1 + |ln t| (uniform). Negative theta gives the w^(+|theta|) forms.
NormResult equivalent_log_profile_norm(const Profile& phi, const SpaceParams& params,
                                       const QuadratureOptions& quad = {});

NormResult equivalent_log_norm(const GridFunction& f, const Net& net, const SpaceParams& params,
                               const QuadratureOptions& quad = {});

/// Bounds [lo, hi] of (sup_{0<eps<=1} eps^theta t^eps) * (1 + |ln t|)^theta over t in (0,1), theta >= 0.
std::pair<double, double> uniform_weight_sup_bounds(double theta);

/// Lower bound of (inf_{0<eps<=1/p} eps^(-theta) t^(-eps)) / (1 + |ln t|)^theta over t in (0,1), theta > 0.
double uniform_weight_inf_lower(double theta, double p);

}  // namespace grandnet
