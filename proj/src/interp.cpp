#include "grandnet/interp.hpp"

#include <algorithm>
#include <cmath>

#include "grandnet/error.hpp"
#include "grandnet/numeric.hpp"

namespace grandnet {

namespace {

/// Integral of t^(x-1) over [t0, t1], with t0 = 0 or t1 = inf allowed.
double monomial_span(double x, double t0, double t1) {
  if (t0 == 0.0 && std::isinf(t1)) return kInf;
  if (t0 == 0.0) return x > 0 ? std::pow(t1, x) / x : kInf;
  if (std::isinf(t1)) return x < 0 ? -std::pow(t0, x) / x : kInf;
  return power_span(x, std::log(t0), std::log(t1));
}

/// Integral over [t0, t1] of (t^-eta (A + B t))^q dt/t.
double envelope_piece(double A, double B, double eta, double q, double t0, double t1) {
  if (!(t1 > t0)) return 0.0;
  if (A == 0.0 && B == 0.0) return 0.0;
  if (B == 0.0) return std::pow(A, q) * monomial_span(-eta * q, t0, t1);
  if (A == 0.0) return std::pow(B, q) * monomial_span((1.0 - eta) * q, t0, t1);
  if (q == 1.0) return A * monomial_span(-eta, t0, t1) + B * monomial_span(1.0 - eta, t0, t1);
  if (q == 2.0)
    return A * A * monomial_span(-2 * eta, t0, t1) + 2 * A * B * monomial_span(1.0 - 2 * eta, t0, t1) +
           B * B * monomial_span(2.0 - 2 * eta, t0, t1);
  if (t0 == 0.0 || std::isinf(t1)) return kInf;  // both coefficients nonzero on an unbounded piece
  const double x0 = std::log(t0), x1 = std::log(t1);
  const int panels = std::max(4, static_cast<int>(std::ceil(2.0 * (x1 - x0))));
  return integrate_gl([&](double x) { return std::exp(-eta * q * x) * std::pow(A + B * std::exp(x), q); }, x0, x1,
                      panels, 16);
}

GridFunction clamp_to(const GridFunction& f, double level) {
  return GridFunction(f.values().cwiseMax(-level).cwiseMin(level));
}

}  // namespace

void KFuncConfig::validate() const {
  if (lambda_points < 1 || t_points < 1 || scaling_points < 2)
    throw Error(ErrorKind::InvalidInput, "K-functional grids must be nonempty");
  if (!(t_min > 0 && t_max > t_min)) throw Error(ErrorKind::InvalidInput, "need 0 < t_min < t_max");
  if (!std::is_sorted(lambda_grid.begin(), lambda_grid.end()) || !std::is_sorted(t_grid.begin(), t_grid.end()))
    throw Error(ErrorKind::InvalidInput, "K-functional grids must be sorted");
  for (double v : lambda_grid)
    if (!(v > 0)) throw Error(ErrorKind::InvalidInput, "truncation levels must be positive");
  for (double v : t_grid)
    if (!(v > 0)) throw Error(ErrorKind::InvalidInput, "t grid must be positive");
  search.validate();
}

std::vector<double> KFuncConfig::resolved_lambda_grid(const GridFunction& f) const {
  if (!lambda_grid.empty()) return lambda_grid;
  const Eigen::VectorXd mag = f.values().cwiseAbs();
  double lo = kInf, hi = 0.0;
  for (double v : mag)
    if (v > 0) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  if (hi == 0.0) return {};
  if (lo == hi || lambda_points == 1) return {hi};
  std::vector<double> out(static_cast<std::size_t>(lambda_points));
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < lambda_points; ++i) out[i] = std::exp(a + (b - a) * i / (lambda_points - 1));
  return out;
}

std::vector<double> KFuncConfig::resolved_t_grid() const {
  if (!t_grid.empty()) return t_grid;
  std::vector<double> out(static_cast<std::size_t>(t_points));
  const double a = std::log(t_min), b = std::log(t_max);
  for (int i = 0; i < t_points; ++i) out[i] = t_points == 1 ? t_min : std::exp(a + (b - a) * i / (t_points - 1));
  return out;
}

void InterpParams::validate() const {
  if (!(eta > 0 && eta < 1)) throw Error(ErrorKind::InvalidInput, "eta must lie in (0, 1)");
  if (!(q >= 1) || std::isinf(q)) throw Error(ErrorKind::InvalidInput, "interpolation q must lie in [1, inf)");
  endpoint0.validate();
  endpoint1.validate();
  if (p) {
    const double expected = target_p();
    if (std::abs(1.0 / *p - 1.0 / expected) > 1e-12)
      throw Error(ErrorKind::InvalidInput, "1/p must equal (1-eta)/p0 + eta/p1");
  }
}

double InterpParams::target_p() const {
  return 1.0 / ((1.0 - eta) / endpoint0.p + eta / endpoint1.p);
}

double KFunctionalBound::operator()(double t) const {
  double best = kInf;
  for (const Line& l : lines) best = std::min(best, l.intercept + t * l.slope);
  return best;
}

std::vector<KFunctionalBound::Line> KFunctionalBound::envelope(std::vector<double>* breakpoints) const {
  std::vector<Line> sorted;
  for (const Line& l : lines)
    if (std::isfinite(l.intercept) && std::isfinite(l.slope)) sorted.push_back(l);
  std::sort(sorted.begin(), sorted.end(), [](const Line& a, const Line& b) {
    return a.slope != b.slope ? a.slope > b.slope : a.intercept < b.intercept;
  });
  auto cross = [](const Line& a, const Line& b) { return (b.intercept - a.intercept) / (a.slope - b.slope); };
  std::vector<Line> hull;
  for (const Line& l : sorted) {
    if (!hull.empty() && hull.back().slope == l.slope) continue;  // larger intercept at equal slope
    while (!hull.empty() && hull.back().intercept >= l.intercept) hull.pop_back();
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], l) <= cross(hull[hull.size() - 2], hull.back()))
      hull.pop_back();
    hull.push_back(l);
  }
  if (breakpoints) {
    breakpoints->clear();
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) breakpoints->push_back(cross(hull[i], hull[i + 1]));
  }
  return hull;
}

KFunctionalBound k_functional_bound(const GridFunction& f, const SpaceParams& p0, const SpaceParams& p1,
                                    const Net& net, const KFuncConfig& cfg) {
  cfg.validate();
  const Profile whole = net_average_profile(f, net).profile;
  KFunctionalBound out;
  out.norm0 = grand_profile_norm(whole, p0, cfg.search).value;
  out.norm1 = grand_profile_norm(whole, p1, cfg.search).value;
  out.infinite = std::isinf(out.norm0) || std::isinf(out.norm1);
  // Trivial decompositions (f, 0) and (0, f).
  out.lines.push_back({out.norm0, 0.0});
  out.lines.push_back({0.0, out.norm1});
  for (DecompositionFamily fam : cfg.families) {
    if (fam == DecompositionFamily::Scaling) {
      for (int i = 1; i + 1 < cfg.scaling_points; ++i) {
        const double lam = static_cast<double>(i) / (cfg.scaling_points - 1);
        out.lines.push_back({lam * out.norm0, (1.0 - lam) * out.norm1});
      }
    } else {
      for (double level : cfg.resolved_lambda_grid(f)) {
        const GridFunction low = clamp_to(f, level);
        const GridFunction high(f.values() - low.values());
        const double n0 = grand_net_norm(high, net, p0, cfg.search).value;
        const double n1 = grand_net_norm(low, net, p1, cfg.search).value;
        out.lines.push_back({n0, n1});
      }
    }
  }
  return out;
}

double k_functional_upper(const GridFunction& f, double t, const SpaceParams& p0, const SpaceParams& p1,
                          const Net& net, const KFuncConfig& cfg) {
  if (!(t > 0)) throw Error(ErrorKind::OutOfDomain, "K-functional needs t > 0");
  return k_functional_bound(f, p0, p1, net, cfg)(t);
}

InterpolationNorm interpolation_norm_of_bound(const KFunctionalBound& bound, double eta, double q) {
  InterpolationNorm out;
  if (bound.infinite) {
    out.value = out.unit_window = kInf;
    out.infinite = true;
    return out;
  }
  std::vector<double> bps;
  const auto hull = bound.envelope(&bps);
  CompensatedSum total, unit;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const double t0 = i == 0 ? 0.0 : bps[i - 1];
    const double t1 = i + 1 == hull.size() ? kInf : bps[i];
    const double piece = envelope_piece(hull[i].intercept, hull[i].slope, eta, q, t0, t1);
    total += piece;
    if (t0 < 1.0) unit += envelope_piece(hull[i].intercept, hull[i].slope, eta, q, t0, std::min(t1, 1.0));
  }
  out.value = std::pow(total.value(), 1.0 / q);
  out.unit_window = std::pow(unit.value(), 1.0 / q);
  out.infinite = std::isinf(out.value);
  return out;
}

InterpolationNorm interpolation_norm_upper(const GridFunction& f, const InterpParams& params, const Net& net,
                                           const KFuncConfig& cfg) {
  params.validate();
  return interpolation_norm_of_bound(k_functional_bound(f, params.endpoint0, params.endpoint1, net, cfg), params.eta,
                                     params.q);
}

EmbeddingReport check_interpolation_embedding(const GridFunction& f, const InterpParams& params, const Net& net,
                                              const KFuncConfig& cfg) {
  params.validate();
  const double theta = params.endpoint0.theta;
  if (params.endpoint1.theta != theta) throw Error(ErrorKind::InvalidInput, "endpoints must share theta");
  if (!(theta > 0)) throw Error(ErrorKind::InvalidInput, "the embedding check needs theta > 0");
  const double p0 = params.endpoint0.p, p1 = params.endpoint1.p;
  if (!(p0 > 0 && p0 < p1 && std::isfinite(p1))) throw Error(ErrorKind::InvalidInput, "need 0 < p0 < p1 < inf");

  EmbeddingReport out;
  out.p = params.p.value_or(params.target_p());
  SpaceParams target{theta, out.p, params.q, params.endpoint0.weight};
  out.lhs = grand_net_norm(f, net, target, cfg.search).value;
  const InterpolationNorm rhs = interpolation_norm_upper(f, params, net, cfg);
  out.rhs_upper = rhs.value;
  out.rhs_upper_unit = rhs.unit_window;
  out.ratio = out.lhs == 0.0 ? 0.0 : out.lhs / out.rhs_upper;
  return out;
}

}  // namespace grandnet
