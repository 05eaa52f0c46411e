#pragma once

#include <string>
#include <vector>

#include "grandnet/grid.hpp"
#include "grandnet/profile.hpp"

namespace grandnet {

/// The average function t -> fbar(t, M): sup over members of measure > t of
/// the absolute mean of f. Zero beyond the largest member measure.
struct AvgProfile {
  Profile profile;
  std::string net_id;

  double operator()(double t) const { return profile(t); }
};

/// fbar(t, M*) over all measurable subsets of positive measure, t in (0, 1).
/// With D the prefix integral of the values sorted descending (sign kept) and
/// A that of the values sorted ascending, fbar(t, M*) = max(D(t), -A(t)) / t.
double full_net_average(const GridFunction& f, double t);

/// Exact piecewise a + b/t profile of fbar(., M*).
Profile full_net_profile(const GridFunction& f);

/// |mean of f over member| for each member, in enumeration order.
std::vector<double> member_averages(const GridFunction& f, const std::vector<NetMember>& members);

/// Step profile from (measure, |average|) pairs under the strict |omega| > t rule.
Profile step_profile_from_members(const std::vector<NetMember>& members, const std::vector<double>& averages);

AvgProfile net_average_profile(const GridFunction& f, const Net& net);

/// Integral over (0,1) of fbar(t, M) * gbar(t, M) dt.
double holder_pairing(const GridFunction& f, const GridFunction& g, const Net& net);

}  // namespace grandnet
