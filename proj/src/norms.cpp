#include "grandnet/norms.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "grandnet/error.hpp"
#include "grandnet/numeric.hpp"
#include "grandnet/rearrange.hpp"

namespace grandnet {

namespace {

constexpr double kInvPhi = 0.6180339887498949;
constexpr std::size_t kMaxSeeds = 128;
constexpr double kBracketFactor = 1e-4;

struct Sample {
  double log_eps;
  double score;  // objective for Sup, negated objective for Inf
};

double score_of(double v, Extremum kind) {
  if (std::isnan(v)) return -kInf;
  return kind == Extremum::Sup ? v : -v;
}

/// Shift-to-exponent map of one branch: s(eps) = base + sign * eps.
struct ShiftMap {
  double base;
  double sign;
  double operator()(double eps) const { return base + sign * eps; }
};

double inner_value(const Profile& phi, double s, double q, const QuadratureOptions& quad) {
  if (std::isinf(q)) return lorentz_sup(phi, s);
  const double integral = lorentz_integral(phi, s, q, quad);
  return std::isinf(integral) ? kInf : std::pow(integral, 1.0 / q);
}

std::vector<double> critical_seeds(const Profile& phi, double theta, double cap) {
  std::vector<double> seeds;
  if (theta == 0.0) return seeds;
  const auto bps = phi.breakpoints();
  const std::size_t stride = std::max<std::size_t>(1, bps.size() / kMaxSeeds);
  for (std::size_t i = 0; i < bps.size(); i += stride)
    if (bps[i] > 0 && bps[i] < 1) seeds.push_back(critical_epsilon(theta, bps[i], cap));
  return seeds;
}

}  // namespace

void EpsilonSearch::validate() const {
  if (!(eps_floor > 0)) throw Error(ErrorKind::InvalidInput, "eps_floor must be positive");
  if (grid_points < 2) throw Error(ErrorKind::InvalidInput, "grid_points must be at least 2");
  if (refine_rounds < 0) throw Error(ErrorKind::InvalidInput, "refine_rounds must be nonnegative");
  if (!(rel_tol > 0)) throw Error(ErrorKind::InvalidInput, "rel_tol must be positive");
  if (quad.order < 1 || quad.subdivisions < 1) throw Error(ErrorKind::InvalidInput, "bad quadrature options");
}

const char* to_string(NormBranch b) {
  switch (b) {
    case NormBranch::Classical: return "classical";
    case NormBranch::SupEps: return "sup-eps";
    case NormBranch::InfEps: return "inf-eps";
    case NormBranch::SupEpsPInf: return "sup-eps-p-inf";
    case NormBranch::LogWeighted: return "log-weighted";
  }
  return "unknown";
}

const char* to_string(LorentzVariant v) { return v == LorentzVariant::Star ? "star" : "doublestar"; }

EpsilonOptimum optimize_epsilon(const std::function<double(double)>& objective, double cap, Extremum kind,
                                std::span<const double> seeds, const EpsilonSearch& search) {
  search.validate();
  if (!(cap > 0)) throw Error(ErrorKind::InvalidInput, "epsilon range cap must be positive");
  const double floor = std::min(search.eps_floor, cap);
  const double lf = std::log(floor);
  const double lc = std::log(cap);

  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(search.grid_points) + seeds.size() + 1);
  for (int i = 0; i < search.grid_points; ++i)
    xs.push_back(lf + (lc - lf) * static_cast<double>(i) / (search.grid_points - 1));
  xs.back() = lc;
  for (double s : seeds)
    if (s > 0) xs.push_back(std::clamp(std::log(s), lf, lc));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  auto eval = [&](double log_eps) { return objective(std::exp(log_eps)); };
  std::vector<Sample> samples;
  samples.reserve(xs.size());
  for (double x : xs) {
    const double v = x == lc ? objective(cap) : eval(x);
    if (kind == Extremum::Sup && std::isinf(v) && v > 0) return {kInf, std::exp(x), 0.0};
    samples.push_back({x, score_of(v, kind)});
  }

  // Local optima of the sampled score, best first.
  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const bool left_ok = i == 0 || samples[i].score >= samples[i - 1].score;
    const bool right_ok = i + 1 == samples.size() || samples[i].score >= samples[i + 1].score;
    if (left_ok && right_ok && std::isfinite(samples[i].score)) peaks.push_back(i);
  }
  std::sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) { return samples[a].score > samples[b].score; });

  Sample best{lc, -kInf};
  for (const auto& s : samples)
    if (s.score > best.score) best = s;
  if (!std::isfinite(best.score)) return {kInf, cap, 0.0};

  double gap = 0.0;
  const std::size_t rounds = std::min<std::size_t>(peaks.size(), static_cast<std::size_t>(search.refine_rounds));
  for (std::size_t r = 0; r < rounds; ++r) {
    const std::size_t i = peaks[r];
    double a = samples[i == 0 ? 0 : i - 1].log_eps;
    double b = samples[i + 1 == samples.size() ? i : i + 1].log_eps;
    if (!(b > a)) continue;
    auto score = [&](double x) { return score_of(eval(x), kind); };
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = score(c), fd = score(d);
    while (b - a > search.rel_tol * kBracketFactor) {
      if (fc >= fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - kInvPhi * (b - a);
        fc = score(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + kInvPhi * (b - a);
        fd = score(d);
      }
    }
    const Sample cand = fc >= fd ? Sample{c, fc} : Sample{d, fd};
    if (cand.score > best.score) best = cand;
    if (r == 0) gap = std::abs(fc - fd);
  }
  const double value = kind == Extremum::Sup ? best.score : -best.score;
  return {value, best.log_eps == lc ? cap : std::exp(best.log_eps), gap};
}

double critical_epsilon(double theta, double t, double cap) {
  if (!(t > 0 && t < 1)) throw Error(ErrorKind::OutOfDomain, "critical_epsilon needs t in (0, 1)");
  if (theta == 0.0) throw Error(ErrorKind::InvalidInput, "critical_epsilon needs theta != 0");
  if (!(cap > 0)) throw Error(ErrorKind::InvalidInput, "critical_epsilon needs cap > 0");
  return std::min(std::abs(theta) / std::abs(std::log(t)), cap);
}

double profile_net_norm(const Profile& phi, double p, double q, const QuadratureOptions& quad) {
  if (!(p > 0) || !(q > 0)) throw Error(ErrorKind::InvalidInput, "p and q must lie in (0, inf]");
  if (phi.is_zero()) return 0.0;
  return inner_value(phi, std::isinf(p) ? 0.0 : 1.0 / p, q, quad);
}

double net_norm(const GridFunction& f, const Net& net, double p, double q, const QuadratureOptions& quad) {
  return profile_net_norm(net_average_profile(f, net).profile, p, q, quad);
}

NormResult grand_profile_norm(const Profile& phi, const SpaceParams& params, const EpsilonSearch& search,
                              double eps_cap) {
  params.validate();
  search.validate();
  const bool p_inf = std::isinf(params.p);
  const double inv_p = p_inf ? 0.0 : 1.0 / params.p;

  NormResult out;
  if (params.theta == 0.0) {
    out.branch = NormBranch::Classical;
    out.value = phi.is_zero() ? 0.0 : inner_value(phi, inv_p, params.q, search.quad);
    out.infinite = std::isinf(out.value);
    return out;
  }

  ShiftMap shift{inv_p, 1.0};
  double cap = 1.0;
  Extremum kind = Extremum::Sup;
  out.branch = p_inf ? NormBranch::SupEpsPInf : NormBranch::SupEps;
  if (params.theta < 0) {
    shift.sign = -1.0;
    cap = inv_p;
    kind = Extremum::Inf;
    out.branch = NormBranch::InfEps;
  }
  if (eps_cap > 0) cap = std::min(cap, eps_cap);
  if (phi.is_zero()) {
    out.eps = cap;
    return out;
  }

  const double theta = params.theta;
  const double q = params.q;
  auto objective = [&](double eps) {
    const double inner = inner_value(phi, shift(eps), q, search.quad);
    if (std::isinf(inner)) return kInf;
    return std::pow(eps, theta) * inner;
  };
  const auto seeds = critical_seeds(phi, theta, cap);
  const EpsilonOptimum opt = optimize_epsilon(objective, cap, kind, seeds, search);
  out.value = opt.value;
  out.infinite = std::isinf(opt.value);
  out.eps = opt.eps;
  out.gap = opt.gap;
  return out;
}

NormResult grand_net_norm(const GridFunction& f, const Net& net, const SpaceParams& params,
                          const EpsilonSearch& search) {
  return grand_profile_norm(net_average_profile(f, net).profile, params, search);
}

NormResult grand_lorentz_norm(const GridFunction& f, const SpaceParams& params, LorentzVariant variant,
                              const EpsilonSearch& search) {
  const Rearrangement r(f);
  return grand_profile_norm(variant == LorentzVariant::Star ? r.star_profile() : r.double_star_profile(), params,
                            search);
}

// ---------------------------------------------------------------------------
// Log-weighted equivalents. Work in L = -ln t, where the weight is c + L.

namespace {

/// Integral of fn over [x0, x1] (x1 may be +inf with exponential decay rate
/// alpha). `dist0` is the distance from x0 to the weight singularity; at zero
/// the integrand behaves like (x - x0)^beta and the first 2^-40 sliver is
/// integrated from that leading term.
template <class Fn>
double integrate_log_range(Fn&& fn, double x0, double x1, double alpha, double dist0, double beta, int order) {
  const double decay_end = x0 + 80.0 / alpha;
  const double end = std::min(x1, decay_end);
  if (!(end > x0)) return 0.0;
  const double uniform_width = std::min(1.0, 2.0 / alpha);
  CompensatedSum total;
  double left = x0;
  double h;
  if (dist0 <= 0.0) {
    const double w = std::min(end - x0, 1.0);
    const double sliver = w * std::ldexp(1.0, -40);
    const double f_s = fn(x0 + sliver);
    if (std::isfinite(f_s)) total += f_s * sliver / (beta + 1.0);
    left = x0 + sliver;
    h = sliver;
  } else {
    h = std::min(0.25 * dist0, uniform_width);
  }
  while (left < end) {
    const double right = std::min(end, left + h);
    total += integrate_gl(fn, left, right, 1, order);
    left = right;
    h = std::min(2.0 * h, uniform_width);
  }
  return total.value();
}

/// sup of g over [x0, x1] by sampling and golden-section refinement.
template <class Fn>
double sample_sup(Fn&& g, double x0, double x1) {
  constexpr int kSamples = 65;
  double best = -kInf;
  int best_i = 0;
  std::vector<double> xs(kSamples);
  for (int i = 0; i < kSamples; ++i) {
    xs[i] = x0 + (x1 - x0) * i / (kSamples - 1);
    const double v = g(xs[i]);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  double a = xs[std::max(0, best_i - 1)];
  double b = xs[std::min(kSamples - 1, best_i + 1)];
  double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
  double fc = g(c), fd = g(d);
  for (int it = 0; it < 100 && b - a > 1e-13 * std::max(1.0, std::abs(b)); ++it) {
    if (fc >= fd) {
      b = d; d = c; fd = fc; c = b - kInvPhi * (b - a); fc = g(c);
    } else {
      a = c; c = d; fc = fd; d = a + kInvPhi * (b - a); fd = g(d);
    }
  }
  return std::max({best, fc, fd});
}

}  // namespace

NormResult equivalent_log_profile_norm(const Profile& phi, const SpaceParams& params, const QuadratureOptions& quad) {
  params.validate();
  if (std::isinf(params.p)) throw Error(ErrorKind::UnsupportedBranch, "log-weighted equivalents need p < inf");
  NormResult out;
  out.branch = NormBranch::LogWeighted;
  if (phi.is_zero()) return out;

  const double c = log_weight_offset(params.weight);
  const double gamma = -params.theta;
  const double inv_p = 1.0 / params.p;
  const double q = params.q;
  const auto segs = phi.segments();

  // phi(t) in terms of L = -ln t.
  auto phi_at = [&](const ProfileSegment& g, double L) { return std::max(0.0, g.a + g.b * std::exp(L)); };
  const ProfileSegment& last = segs.back();
  const bool touches_one = last.hi >= 1.0;
  const double phi_near_one = touches_one ? std::max(0.0, last(1.0)) : 0.0;

  auto mark_infinite = [&] {
    out.value = kInf;
    out.infinite = true;
    return out;
  };

  if (std::isinf(q)) {
    if (c == 0.0 && gamma < 0 && phi_near_one > 0) return mark_infinite();
    double best = 0.0;
    for (const ProfileSegment& g : segs) {
      const double L_hi = -std::log(g.hi);
      const double L_lo = g.lo > 0 ? -std::log(g.lo) : kInf;
      auto value = [&](double L) {
        if (c + L <= 0.0) return gamma == 0.0 ? phi_at(g, L) : (gamma > 0 ? 0.0 : kInf);
        return std::exp(-L * inv_p) * std::pow(c + L, gamma) * phi_at(g, L);
      };
      if (g.is_step()) {
        best = std::max(best, value(L_hi));
        if (gamma > 0) {
          const double L_star = params.p * gamma - c;
          if (L_star > L_hi && L_star < L_lo) best = std::max(best, value(L_star));
          if (std::isfinite(L_lo)) best = std::max(best, value(L_lo));
        }
      } else {
        const double start = (c + L_hi <= 0.0) ? L_hi + 1e-12 : L_hi;
        best = std::max(best, sample_sup(value, start, L_lo));
      }
    }
    out.value = best;
    return out;
  }

  const double alpha = q * inv_p;
  const double beta = gamma * q;
  if (c == 0.0 && phi_near_one > 0 && beta <= -1.0) return mark_infinite();
  CompensatedSum total;
  for (const ProfileSegment& g : segs) {
    const double L_hi = -std::log(g.hi);
    const double L_lo = g.lo > 0 ? -std::log(g.lo) : kInf;
    auto integrand = [&](double L) {
      const double v = phi_at(g, L);
      if (v == 0.0) return 0.0;
      return std::exp(-alpha * L) * std::pow(c + L, beta) * std::pow(v, q);
    };
    total += integrate_log_range(integrand, L_hi, L_lo, alpha, c + L_hi, beta, quad.order);
  }
  out.value = std::pow(std::max(0.0, total.value()), 1.0 / q);
  out.infinite = std::isinf(out.value);
  return out;
}

NormResult equivalent_log_norm(const GridFunction& f, const Net& net, const SpaceParams& params,
                               const QuadratureOptions& quad) {
  return equivalent_log_profile_norm(net_average_profile(f, net).profile, params, quad);
}

std::pair<double, double> uniform_weight_sup_bounds(double theta) {
  if (theta < 0) throw Error(ErrorKind::InvalidInput, "uniform_weight_sup_bounds needs theta >= 0");
  if (theta == 0.0) return {1.0, 1.0};
  const double at_infinity = std::pow(theta / std::exp(1.0), theta);
  const double at_critical = std::pow((1.0 + theta) / std::exp(1.0), theta);
  double hi = std::max(1.0, at_critical);
  if (theta > 1.0) hi = std::max(hi, std::exp(1.0 - theta) * std::pow(theta, theta));
  return {std::min(1.0, at_infinity), hi};
}

double uniform_weight_inf_lower(double theta, double p) {
  if (!(theta > 0) || !(p > 0) || std::isinf(p))
    throw Error(ErrorKind::InvalidInput, "uniform_weight_inf_lower needs theta > 0 and finite p > 0");
  if (p * theta >= 1.0) return std::exp(theta - 1.0 / p) * std::pow(theta, -theta);
  return std::pow(p, theta);
}

}  // namespace grandnet
