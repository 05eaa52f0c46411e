#include "grandnet/opkernel.hpp"

#include <algorithm>
#include <cmath>

#include "grandnet/error.hpp"
#include "grandnet/numeric.hpp"

namespace grandnet {

Kernel::Kernel(Eigen::MatrixXd values) : values_(std::move(values)) {
  if (values_.rows() == 0 || values_.cols() == 0) throw Error(ErrorKind::InvalidInput, "kernel grid must be nonempty");
  if (!values_.allFinite()) throw Error(ErrorKind::InvalidInput, "kernel values must be finite");
}

GridFunction apply_operator(const Kernel& k, const GridFunction& f) {
  if (f.n() != k.nx())
    throw Error(ErrorKind::InvalidInput, "function resolution " + std::to_string(f.n()) + " does not match kernel nx " +
                                             std::to_string(k.nx()));
  return GridFunction(k.values().transpose() * f.values() / static_cast<double>(k.nx()));
}

GridFunction column_average(const Kernel& k, std::span<const int> y_cells) {
  if (y_cells.empty()) throw Error(ErrorKind::InvalidInput, "column_average needs a nonempty set of y-cells");
  Eigen::VectorXd h = Eigen::VectorXd::Zero(k.nx());
  for (int j : y_cells) {
    if (j < 0 || j >= k.ny()) throw Error(ErrorKind::InvalidInput, "y-cell index out of range");
    h += k.values().col(j);
  }
  return GridFunction(h / static_cast<double>(y_cells.size()));
}

void AssociateNorm::validate() const {
  if (!(p > 1) || std::isinf(p)) throw Error(ErrorKind::InvalidInput, "associate norms need p in (1, inf)");
  if (kind == Kind::GrandLorentz && !(theta1 >= 0))
    throw Error(ErrorKind::InvalidInput, "grand Lorentz source needs theta1 >= 0");
}

std::string AssociateNorm::id() const {
  return kind == Kind::Lebesgue ? "lp-dual" : "gl-weak";
}

double lebesgue_norm(const GridFunction& f, double p) {
  if (!(p > 0)) throw Error(ErrorKind::InvalidInput, "Lebesgue exponent must be positive");
  if (std::isinf(p)) return f.values().cwiseAbs().maxCoeff();
  CompensatedSum s;
  for (double v : f.values()) s += std::pow(std::abs(v), p);
  return std::pow(s.value() / static_cast<double>(f.n()), 1.0 / p);
}

double associate_norm(const GridFunction& h, const AssociateNorm& a, const EpsilonSearch& search) {
  a.validate();
  if (a.kind == AssociateNorm::Kind::Lebesgue) return lebesgue_norm(h, a.dual_p());
  const SpaceParams weak{-a.theta1, a.dual_p(), kInf};
  return grand_lorentz_norm(h, weak, LorentzVariant::Star, search).value;
}

double source_norm(const GridFunction& f, const AssociateNorm& a, const EpsilonSearch& search) {
  a.validate();
  if (a.kind == AssociateNorm::Kind::Lebesgue) return lebesgue_norm(f, a.p);
  return grand_lorentz_norm(f, SpaceParams{a.theta1, a.p, 1.0}, LorentzVariant::Star, search).value;
}

GridFunction duality_extremal(const GridFunction& h, const AssociateNorm& a) {
  a.validate();
  const double e = a.dual_p() - 1.0;
  Eigen::VectorXd f = h.values().unaryExpr([e](double v) {
    return v == 0.0 ? 0.0 : std::copysign(std::pow(std::abs(v), e), v);
  });
  GridFunction out(f);
  const double norm = lebesgue_norm(out, a.p);
  return norm > 0 ? GridFunction(f / norm) : out;
}

double weighted_t_sup(double measure, double exponent, double gamma, LogWeight weight) {
  if (!(measure > 0)) throw Error(ErrorKind::InvalidInput, "member measure must be positive");
  const double c = log_weight_offset(weight);
  const double L_m = measure >= 1.0 ? 0.0 : -std::log(measure);
  if (c + L_m == 0.0 && gamma < 0) return kInf;
  auto value = [&](double L) { return std::exp(-exponent * L) * (gamma == 0.0 ? 1.0 : std::pow(c + L, gamma)); };
  if (gamma > 0 && exponent > 0) {
    const double L_star = gamma / exponent - c;
    if (L_star > L_m) return value(L_star);
  }
  if (gamma > 0 && exponent == 0.0) return kInf;
  return value(L_m);
}

double target_norm(const GridFunction& g, const TargetNorm& target) {
  if (target.kind == TargetNorm::Kind::Grand)
    return grand_net_norm(g, target.net, SpaceParams{target.theta, target.q, kInf, target.weight}, target.search).value;
  return equivalent_log_norm(g, target.net, SpaceParams{target.theta, target.q, kInf, target.weight}).value;
}

double boundedness_criterion(const Kernel& k, const Net& y_net, double q, double theta, const AssociateNorm& a,
                             LogWeight weight, const EpsilonSearch& search) {
  if (!(q > 1)) throw Error(ErrorKind::InvalidInput, "boundedness criterion needs q > 1");
  if (!(theta >= 0)) throw Error(ErrorKind::InvalidInput, "boundedness criterion needs theta >= 0");
  if (!y_net.enumerable())
    throw Error(ErrorKind::UnsupportedEnumeration, "boundedness criterion needs an enumerable y-net");
  const double exponent = std::isinf(q) ? 0.0 : 1.0 / q;
  double best = 0.0;
  for (const NetMember& m : net_members(y_net, k.ny())) {
    const double dual = associate_norm(column_average(k, m.cells), a, search);
    if (dual == 0.0) continue;
    best = std::max(best, weighted_t_sup(m.measure, exponent, -theta, weight) * dual);
  }
  return best;
}

double quasi_weak_criterion(const Kernel& k, double p, double q, double theta1, double theta2, const Net& x_net,
                            const Net& y_net, LogWeight weight) {
  if (!(p > 1) || !(q > 1) || std::isinf(p) || std::isinf(q))
    throw Error(ErrorKind::InvalidInput, "quasi-weak criterion needs 1 < p, q < inf");
  if (!(theta1 >= 0 && theta2 >= 0)) throw Error(ErrorKind::InvalidInput, "quasi-weak criterion needs theta >= 0");
  if (!x_net.enumerable() || !y_net.enumerable())
    throw Error(ErrorKind::UnsupportedEnumeration, "quasi-weak criterion needs enumerable nets");
  const double inv_pc = 1.0 / conjugate_exponent(p);
  const auto xs = net_members(x_net, k.nx());
  const auto ys = net_members(y_net, k.ny());
  std::vector<double> x_factor(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) x_factor[i] = weighted_t_sup(xs[i].measure, inv_pc, theta1, weight);
  double best = 0.0;
  for (const NetMember& e : ys) {
    const GridFunction h = column_average(k, e.cells);
    const double y_factor = weighted_t_sup(e.measure, 1.0 / q, -theta2, weight);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      CompensatedSum s;
      for (int c : xs[i].cells) s += h[c];
      const double avg = std::abs(s.value()) / static_cast<double>(xs[i].cells.size());
      if (avg == 0.0) continue;
      best = std::max(best, x_factor[i] * y_factor * avg);
    }
  }
  return best;
}

EmpiricalNorm empirical_operator_norm(const Kernel& k, const AssociateNorm& source, const TargetNorm& target,
                                      std::span<const GridFunction> corpus) {
  source.validate();
  EmpiricalNorm out;
  auto consider = [&](const GridFunction& f, bool extremal) {
    if (f.n() != k.nx()) throw Error(ErrorKind::InvalidInput, "corpus function resolution does not match kernel");
    const double denom = source_norm(f, source, target.search);
    if (!(denom > 0)) return;
    ++out.candidates;
    const double ratio = target_norm(apply_operator(k, f), target) / denom;
    if (ratio > out.value) {
      out.value = ratio;
      out.attained_by_extremal = extremal;
    }
  };
  for (const GridFunction& f : corpus) consider(f, false);
  if (target.net.enumerable())
    for (const NetMember& m : net_members(target.net, k.ny()))
      consider(duality_extremal(column_average(k, m.cells), source), true);
  return out;
}

}  // namespace grandnet
