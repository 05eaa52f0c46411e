#include "grandnet/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "grandnet/error.hpp"
#include "grandnet/numeric.hpp"

namespace grandnet {

Rearrangement::Rearrangement(const GridFunction& f) : sorted_(f.values().cwiseAbs()), prefix_(f.n() + 1) {
  std::sort(sorted_.begin(), sorted_.end(), std::greater<>());
  const double w = f.cell_width();
  CompensatedSum s;
  prefix_(0) = 0.0;
  for (Eigen::Index k = 0; k < n(); ++k) {
    s += sorted_(k) * w;
    prefix_(k + 1) = s.value();
  }
}

double Rearrangement::star(double t) const {
  if (t >= 1.0) return 0.0;
  const auto k = std::min<Eigen::Index>(static_cast<Eigen::Index>(std::floor(t * n())), n() - 1);
  return sorted_(std::max<Eigen::Index>(k, 0));
}

double Rearrangement::prefix_integral(double t) const {
  if (t <= 0) return 0.0;
  if (t >= 1) return prefix_(n());
  const double dn = static_cast<double>(n());
  auto k = std::min<Eigen::Index>(static_cast<Eigen::Index>(std::floor(t * dn)), n() - 1);
  return prefix_(k) + (t - static_cast<double>(k) / dn) * sorted_(k);
}

double Rearrangement::double_star(double t) const {
  if (!(t > 0 && t <= 1)) throw Error(ErrorKind::OutOfDomain, "f** is evaluated for t in (0, 1]");
  if (t * n() <= 1.0) return sorted_(0);
  return prefix_integral(t) / t;
}

Profile Rearrangement::star_profile() const {
  std::vector<ProfileSegment> segs;
  const double dn = static_cast<double>(n());
  for (Eigen::Index k = 0; k < n(); ++k)
    segs.push_back({k / dn, k + 1 == n() ? 1.0 : (k + 1) / dn, sorted_(k), 0.0});
  return Profile(std::move(segs));
}

Profile Rearrangement::double_star_profile() const {
  // On cell k: f**(t) = v_k + (P_k - t_k v_k) / t.
  std::vector<ProfileSegment> segs;
  const double dn = static_cast<double>(n());
  for (Eigen::Index k = 0; k < n(); ++k) {
    const double lo = k / dn;
    const double b = k == 0 ? 0.0 : prefix_(k) - lo * sorted_(k);
    segs.push_back({lo, k + 1 == n() ? 1.0 : (k + 1) / dn, sorted_(k), b});
  }
  return Profile(std::move(segs));
}

Rearrangement decreasing_rearrangement(const GridFunction& f) { return Rearrangement(f); }

double maximal_average(const GridFunction& f, double t) {
  if (!(t > 0 && t <= 1)) throw Error(ErrorKind::OutOfDomain, "maximal_average needs t in (0, 1]");
  return Rearrangement(f).double_star(t);
}

}  // namespace grandnet
