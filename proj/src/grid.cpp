#include "grandnet/grid.hpp"

#include <algorithm>
#include <cmath>

#include "grandnet/error.hpp"
#include "grandnet/numeric.hpp"

namespace grandnet {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::OutOfDomain: return "out-of-domain";
    case ErrorKind::UnsupportedEnumeration: return "unsupported-enumeration";
    case ErrorKind::UnsupportedBranch: return "unsupported-branch";
  }
  return "error";
}

GridFunction::GridFunction(Eigen::VectorXd values) : values_(std::move(values)) {
  if (values_.size() == 0) throw Error(ErrorKind::InvalidInput, "grid function needs at least one cell");
  for (Eigen::Index k = 0; k < values_.size(); ++k)
    if (!std::isfinite(values_(k)))
      throw Error(ErrorKind::InvalidInput, "non-finite value at cell " + std::to_string(k));
}

double GridFunction::integral() const {
  CompensatedSum s;
  for (double v : values_) s += v;
  return s.value() / static_cast<double>(n());
}

GridFunction make_grid_function(std::span<const double> values) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t k = 0; k < values.size(); ++k) v(static_cast<Eigen::Index>(k)) = values[k];
  return GridFunction(std::move(v));
}

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

Net Net::explicit_sets(std::vector<std::vector<int>> sets) {
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) throw Error(ErrorKind::InvalidInput, "explicit net members must be nonempty");
    if (s.front() < 0) throw Error(ErrorKind::InvalidInput, "negative cell index in explicit net");
  }
  return Net(NetKind::Explicit, std::move(sets));
}

std::string Net::id() const {
  switch (kind_) {
    case NetKind::Full: return "full";
    case NetKind::Dyadic: return "dyadic";
    case NetKind::GridIntervals: return "grid-intervals";
    case NetKind::Explicit: return "explicit";
  }
  return "unknown";
}

void Net::check_resolution(Eigen::Index n) const {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "grid resolution must be positive");
  if (kind_ == NetKind::Dyadic && !is_power_of_two(n))
    throw Error(ErrorKind::InvalidInput, "dyadic net requires n a power of two, got " + std::to_string(n));
  if (kind_ == NetKind::Explicit)
    for (const auto& s : sets_)
      if (s.back() >= n)
        throw Error(ErrorKind::InvalidInput,
                    "explicit net cell " + std::to_string(s.back()) + " outside grid of " + std::to_string(n));
}

std::vector<NetMember> net_members(const Net& net, Eigen::Index n) {
  if (!net.enumerable())
    throw Error(ErrorKind::UnsupportedEnumeration, "the full net is handled analytically, not enumerated");
  net.check_resolution(n);
  const double dn = static_cast<double>(n);
  std::vector<NetMember> out;
  auto push_interval = [&](Eigen::Index begin, Eigen::Index len) {
    NetMember m;
    m.id = out.size();
    m.measure = static_cast<double>(len) / dn;
    m.cells.resize(static_cast<std::size_t>(len));
    for (Eigen::Index k = 0; k < len; ++k) m.cells[static_cast<std::size_t>(k)] = static_cast<int>(begin + k);
    out.push_back(std::move(m));
  };
  switch (net.kind()) {
    case NetKind::GridIntervals:
      out.reserve(static_cast<std::size_t>(n * (n + 1) / 2));
      for (Eigen::Index len = 1; len <= n; ++len)
        for (Eigen::Index begin = 0; begin + len <= n; ++begin) push_interval(begin, len);
      break;
    case NetKind::Dyadic:
      for (Eigen::Index len = 1; len <= n; len *= 2)
        for (Eigen::Index begin = 0; begin < n; begin += len) push_interval(begin, len);
      break;
    case NetKind::Explicit: {
      std::vector<std::vector<int>> seen;
      for (const auto& s : net.sets()) {
        if (std::find(seen.begin(), seen.end(), s) != seen.end()) continue;
        seen.push_back(s);
        NetMember m;
        m.id = out.size();
        m.measure = static_cast<double>(s.size()) / dn;
        m.cells = s;
        out.push_back(std::move(m));
      }
      break;
    }
    case NetKind::Full: break;
  }
  return out;
}

const char* to_string(LogWeight w) { return w == LogWeight::Paper ? "paper" : "uniform"; }

LogWeight parse_log_weight(const std::string& s) {
  if (s == "paper") return LogWeight::Paper;
  if (s == "uniform") return LogWeight::Uniform;
  throw Error(ErrorKind::InvalidInput, "unknown weight variant '" + s + "'");
}

void SpaceParams::validate() const {
  if (!(p > 0)) throw Error(ErrorKind::InvalidInput, "p must lie in (0, inf]");
  if (!(q > 0)) throw Error(ErrorKind::InvalidInput, "q must lie in (0, inf]");
  if (!std::isfinite(theta)) throw Error(ErrorKind::InvalidInput, "theta must be finite");
  if (theta < 0 && std::isinf(p))
    throw Error(ErrorKind::UnsupportedBranch, "theta < 0 with p = inf has no defining branch");
}

double conjugate_exponent(double p) {
  if (!(p > 1) || std::isinf(p)) throw Error(ErrorKind::InvalidInput, "conjugate exponent needs p in (1, inf)");
  return p / (p - 1.0);
}

double SpaceParams::conjugate_p() const { return conjugate_exponent(p); }

}  // namespace grandnet
