#include "grandnet/netavg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "grandnet/error.hpp"
#include "grandnet/numeric.hpp"

namespace grandnet {

namespace {

struct SignedPrefixes {
  Eigen::VectorXd desc;    // values sorted descending
  Eigen::VectorXd d_pre;   // d_pre(k) = integral over [0, k/n] of desc
  Eigen::VectorXd a_pre;   // same for the ascending order
};

SignedPrefixes signed_prefixes(const GridFunction& f) {
  SignedPrefixes out;
  out.desc = f.values();
  std::sort(out.desc.begin(), out.desc.end(), std::greater<>());
  const Eigen::Index n = f.n();
  const double w = f.cell_width();
  out.d_pre.resize(n + 1);
  out.a_pre.resize(n + 1);
  out.d_pre(0) = out.a_pre(0) = 0.0;
  CompensatedSum d, a;
  for (Eigen::Index k = 0; k < n; ++k) {
    d += out.desc(k) * w;
    a += out.desc(n - 1 - k) * w;
    out.d_pre(k + 1) = d.value();
    out.a_pre(k + 1) = a.value();
  }
  return out;
}

}  // namespace

double full_net_average(const GridFunction& f, double t) {
  if (!(t > 0 && t < 1)) throw Error(ErrorKind::OutOfDomain, "full_net_average needs t in (0, 1)");
  const SignedPrefixes sp = signed_prefixes(f);
  const Eigen::Index n = f.n();
  const double dn = static_cast<double>(n);
  const auto k = std::min<Eigen::Index>(static_cast<Eigen::Index>(std::floor(t * dn)), n - 1);
  const double dt = t - static_cast<double>(k) / dn;
  const double up = sp.d_pre(k) + dt * sp.desc(k);
  const double down = -(sp.a_pre(k) + dt * sp.desc(n - 1 - k));
  return std::max(up, down) / t;
}

Profile full_net_profile(const GridFunction& f) {
  const SignedPrefixes sp = signed_prefixes(f);
  const Eigen::Index n = f.n();
  const double dn = static_cast<double>(n);
  std::vector<ProfileSegment> segs;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double lo = k / dn;
    const double hi = k + 1 == n ? 1.0 : (k + 1) / dn;
    const double d = sp.desc(k);
    const double u = sp.desc(n - 1 - k);
    // D(t)/t and -A(t)/t on this cell, written as a + b/t.
    ProfileSegment up{lo, hi, d, k == 0 ? 0.0 : sp.d_pre(k) - lo * d};
    ProfileSegment down{lo, hi, -u, k == 0 ? 0.0 : -sp.a_pre(k) + lo * u};
    const double da = up.a - down.a;
    const double db = up.b - down.b;
    double cross = da != 0.0 ? -db / da : -1.0;
    if (cross > lo && cross < hi) {
      const double mid_left = 0.5 * (lo + cross);
      ProfileSegment left = up(mid_left) >= down(mid_left) ? up : down;
      ProfileSegment right = up(mid_left) >= down(mid_left) ? down : up;
      left.hi = cross;
      right.lo = cross;
      segs.push_back(left);
      segs.push_back(right);
    } else {
      const double mid = lo == 0.0 ? 0.5 * hi : 0.5 * (lo + hi);
      segs.push_back(up(mid) >= down(mid) ? up : down);
    }
  }
  return Profile(std::move(segs));
}

std::vector<double> member_averages(const GridFunction& f, const std::vector<NetMember>& members) {
  std::vector<double> out;
  out.reserve(members.size());
  for (const auto& m : members) {
    CompensatedSum s;
    for (int c : m.cells) s += f[c];
    out.push_back(std::abs(s.value()) / static_cast<double>(m.cells.size()));
  }
  return out;
}

Profile step_profile_from_members(const std::vector<NetMember>& members, const std::vector<double>& averages) {
  std::map<double, double> best_at_measure;
  for (std::size_t i = 0; i < members.size(); ++i) {
    auto [it, inserted] = best_at_measure.emplace(members[i].measure, averages[i]);
    if (!inserted) it->second = std::max(it->second, averages[i]);
  }
  // On [m_{j-1}, m_j) the admissible members are those with measure >= m_j.
  std::vector<ProfileSegment> segs(best_at_measure.size());
  double running = 0.0;
  std::size_t j = segs.size();
  for (auto it = best_at_measure.rbegin(); it != best_at_measure.rend(); ++it) {
    running = std::max(running, it->second);
    --j;
    segs[j].hi = it->first;
    segs[j].a = running;
  }
  for (std::size_t i = 0; i < segs.size(); ++i) segs[i].lo = i == 0 ? 0.0 : segs[i - 1].hi;
  return Profile(std::move(segs));
}

AvgProfile net_average_profile(const GridFunction& f, const Net& net) {
  if (net.kind() == NetKind::Full) return {full_net_profile(f), net.id()};
  const auto members = net_members(net, f.n());
  return {step_profile_from_members(members, member_averages(f, members)), net.id()};
}

double holder_pairing(const GridFunction& f, const GridFunction& g, const Net& net) {
  if (net.enumerable() && f.n() != g.n())
    throw Error(ErrorKind::InvalidInput, "holder_pairing on an enumerable net needs equal resolutions");
  return pairing_integral(net_average_profile(f, net).profile, net_average_profile(g, net).profile);
}

}  // namespace grandnet
