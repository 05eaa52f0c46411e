#include <map>
#include <memory>
#include <mutex>

#include <Eigen/Eigenvalues>

#include "grandnet/error.hpp"
#include "grandnet/numeric.hpp"

namespace grandnet {

namespace {

QuadratureRule build_gauss_legendre(int order) {
  // Golub-Welsch: eigen-decomposition of the symmetric Jacobi matrix.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    const double beta = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = beta;
    jacobi(k - 1, k) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  QuadratureRule rule;
  rule.nodes = solver.eigenvalues();
  rule.weights = 2.0 * solver.eigenvectors().row(0).transpose().array().square();
  return rule;
}

}  // namespace

const QuadratureRule& gauss_legendre(int order) {
  if (order < 1) throw Error(ErrorKind::InvalidInput, "quadrature order must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<QuadratureRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<QuadratureRule>(build_gauss_legendre(order));
  return *slot;
}

}  // namespace grandnet
