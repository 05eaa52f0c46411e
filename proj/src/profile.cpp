#include "grandnet/profile.hpp"

#include <algorithm>
#include <cmath>

#include "grandnet/error.hpp"
#include "grandnet/numeric.hpp"

namespace grandnet {

Profile::Profile(std::vector<ProfileSegment> segments) {
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const ProfileSegment& s = segments[i];
    if (!(s.lo < s.hi)) throw Error(ErrorKind::InvalidInput, "profile segment must have lo < hi");
    const double expected_lo = i == 0 ? 0.0 : segments[i - 1].hi;
    if (s.lo != expected_lo) throw Error(ErrorKind::InvalidInput, "profile segments must be contiguous from 0");
    if (s.lo == 0.0 && s.b != 0.0) throw Error(ErrorKind::InvalidInput, "segment touching 0 must be a step");
    if (!segs_.empty() && segs_.back().a == s.a && segs_.back().b == s.b)
      segs_.back().hi = s.hi;
    else
      segs_.push_back(s);
  }
  while (!segs_.empty() && segs_.back().a == 0.0 && segs_.back().b == 0.0) segs_.pop_back();
  log_lo_.reserve(segs_.size());
  log_hi_.reserve(segs_.size());
  for (const auto& s : segs_) {
    log_lo_.push_back(s.lo > 0 ? std::log(s.lo) : -kInf);
    log_hi_.push_back(std::log(s.hi));
  }
}

double Profile::operator()(double t) const {
  if (segs_.empty() || t >= segs_.back().hi) return 0.0;
  auto it = std::upper_bound(segs_.begin(), segs_.end(), t,
                             [](double v, const ProfileSegment& s) { return v < s.hi; });
  return std::max(0.0, (*it)(t));
}

bool Profile::is_step() const {
  return std::all_of(segs_.begin(), segs_.end(), [](const ProfileSegment& s) { return s.is_step(); });
}

std::vector<double> Profile::breakpoints() const {
  std::vector<double> out;
  out.reserve(segs_.size());
  for (const auto& s : segs_) out.push_back(s.hi);
  return out;
}

Profile Profile::scaled(double c) const {
  std::vector<ProfileSegment> out(segs_.begin(), segs_.end());
  for (auto& s : out) {
    s.a *= c;
    s.b *= c;
  }
  return Profile(std::move(out));
}

double lorentz_integral(const Profile& phi, double s, double q, const QuadratureOptions& quad) {
  const auto segs = phi.segments();
  const auto llo = phi.log_lo();
  const auto lhi = phi.log_hi();
  CompensatedSum total;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const ProfileSegment& g = segs[i];
    if (g.is_step()) {
      if (g.a <= 0) continue;
      const double span = power_span(s * q, llo[i], lhi[i]);
      if (std::isinf(span)) return kInf;
      total += std::pow(g.a, q) * span;
    } else if (q == 1.0) {
      total += g.a * power_span(s, llo[i], lhi[i]) + g.b * power_span(s - 1.0, llo[i], lhi[i]);
    } else if (q == 2.0) {
      total += g.a * g.a * power_span(2 * s, llo[i], lhi[i]) + 2 * g.a * g.b * power_span(2 * s - 1, llo[i], lhi[i]) +
               g.b * g.b * power_span(2 * s - 2, llo[i], lhi[i]);
    } else {
      const double x = s * q;
      total += integrate_gl(
          [&](double u) { return std::exp(u * x) * std::pow(std::max(0.0, g.a + g.b * std::exp(-u)), q); },
          llo[i], lhi[i], quad.subdivisions, quad.order);
    }
  }
  return std::max(0.0, total.value());
}

double lorentz_sup(const Profile& phi, double s) {
  double best = 0.0;
  for (const ProfileSegment& g : phi.segments()) {
    if (g.lo == 0.0) {
      if (g.a <= 0) continue;
      if (s < 0) return kInf;
      best = std::max(best, s == 0 ? g.a : g.a * std::pow(g.hi, s));
      continue;
    }
    auto value = [&](double t) { return std::pow(t, s) * std::max(0.0, g(t)); };
    best = std::max({best, value(g.lo), value(g.hi)});
    if (s > 0 && g.a != 0.0) {
      const double t_star = (1.0 - s) * g.b / (s * g.a);
      if (t_star > g.lo && t_star < g.hi) best = std::max(best, value(t_star));
    }
  }
  return best;
}

double pairing_integral(const Profile& phi, const Profile& psi) {
  const auto x = phi.segments();
  const auto y = psi.segments();
  CompensatedSum total;
  std::size_t i = 0, j = 0;
  double lo = 0.0;
  while (i < x.size() && j < y.size()) {
    const double hi = std::min(x[i].hi, y[j].hi);
    const double a = x[i].a * y[j].a;
    const double b = x[i].a * y[j].b + x[i].b * y[j].a;
    const double c = x[i].b * y[j].b;
    total += a * (hi - lo);
    if (lo > 0) {
      total += b * std::log(hi / lo);
      total += c * (1.0 / lo - 1.0 / hi);
    }
    lo = hi;
    if (x[i].hi == hi) ++i;
    if (y[j].hi == hi) ++j;
  }
  return std::max(0.0, total.value());
}

}  // namespace grandnet
