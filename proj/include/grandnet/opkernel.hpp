#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "grandnet/grid.hpp"
#include "grandnet/norms.hpp"

namespace grandnet {

/// Cell-averaged kernel K(x, y) on an nx-by-ny product grid over [0,1]^2.
/// Row i is x-cell i, column j is y-cell j.
class Kernel {
 public:
  explicit Kernel(Eigen::MatrixXd values);

  Eigen::Index nx() const { return values_.rows(); }
  Eigen::Index ny() const { return values_.cols(); }
  const Eigen::MatrixXd& values() const { return values_; }

 private:
  Eigen::MatrixXd values_;
};

/// Tf(y) = int K(x, y) f(x) dx, exact on piecewise constants.
GridFunction apply_operator(const Kernel& k, const GridFunction& f);

/// h(x) = (1/|omega|) int_omega K(x, y) dy for a set of y-cells.
GridFunction column_average(const Kernel& k, std::span<const int> y_cells);

/// Norm of the associate space X* of a source space X.
/// Lebesgue: X = L^p, X* = L^p'. GrandLorentz: X = GL^theta1_{p,1}, X* = GL^-theta1_{p',inf}.
struct AssociateNorm {
  enum class Kind { Lebesgue, GrandLorentz };
  Kind kind = Kind::Lebesgue;
  double p = 2.0;       // source exponent, p in (1, inf)
  double theta1 = 0.0;  // source grand parameter (GrandLorentz only), >= 0

  static AssociateNorm lebesgue(double p) { return {Kind::Lebesgue, p, 0.0}; }
  static AssociateNorm grand_lorentz(double theta1, double p) { return {Kind::GrandLorentz, p, theta1}; }

  void validate() const;
  double dual_p() const { return conjugate_exponent(p); }
  std::string id() const;
};

double lebesgue_norm(const GridFunction& f, double p);

/// |h|_{X*}.
double associate_norm(const GridFunction& h, const AssociateNorm& a, const EpsilonSearch& search = {});

/// |f|_X for the source space paired with `a`.
double source_norm(const GridFunction& f, const AssociateNorm& a, const EpsilonSearch& search = {});

/// f proportional to |h|^(p'-1) sign h, normalized to |f|_{L^p} = 1 (zero if h = 0).
/// Attains |int h f| = |h|_{p'} |f|_p.
GridFunction duality_extremal(const GridFunction& h, const AssociateNorm& a);

/// sup over 0 < t < min(measure, 1) of t^exponent w(t)^gamma. May be +inf for the
/// paper weight with gamma < 0 at measure 1.
double weighted_t_sup(double measure, double exponent, double gamma, LogWeight weight);

/// Norm on the target side of T.
struct TargetNorm {
  enum class Kind {
    WeightedSup,  // sup_t t^(1/q) w(t)^-theta gbar(t, net)
    Grand,        // GN^theta_{q,inf}(net), shift-optimized
  };
  Kind kind = Kind::WeightedSup;
  Net net = Net::grid_intervals();
  double q = 2.0;
  double theta = 0.0;
  LogWeight weight = LogWeight::Uniform;
  EpsilonSearch search{};
};

double target_norm(const GridFunction& g, const TargetNorm& target);

/// max over members omega of the y-net of [sup_{t<|omega|} t^(1/q) w(t)^-theta] * |h_omega|_{X*}.
double boundedness_criterion(const Kernel& k, const Net& y_net, double q, double theta, const AssociateNorm& a,
                             LogWeight weight, const EpsilonSearch& search = {});

/// max over (w, e) in x-net by y-net of
/// [sup_{t1<|w|} t1^(1/p') w(t1)^theta1] [sup_{t2<|e|} t2^(1/q) w(t2)^-theta2] |mean of K over w x e|.
double quasi_weak_criterion(const Kernel& k, double p, double q, double theta1, double theta2, const Net& x_net,
                            const Net& y_net, LogWeight weight);

struct EmpiricalNorm {
  double value = 0.0;
  std::size_t candidates = 0;
  bool attained_by_extremal = false;
};

/// Lower bound on |T|_{X -> target}: max of |Tf|_target / |f|_X over the corpus
/// and the duality extremals of every h_omega, omega in the target net.
EmpiricalNorm empirical_operator_norm(const Kernel& k, const AssociateNorm& source, const TargetNorm& target,
                                      std::span<const GridFunction> corpus);

}  // namespace grandnet
