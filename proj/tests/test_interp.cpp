#include <doctest.h>

#include <cmath>
#include <random>

#include "grandnet/error.hpp"
#include "grandnet/interp.hpp"
#include "grandnet/numeric.hpp"
#include "oracles.hpp"

using namespace grandnet;
using doctest::Approx;

namespace {

GridFunction gf(std::vector<double> v) { return make_grid_function(v); }

const SpaceParams kP0{0.0, 1.0, kInf};
const SpaceParams kP1{0.0, 2.0, kInf};

KFuncConfig small_config() {
  KFuncConfig cfg;
  cfg.lambda_points = 16;
  cfg.t_points = 64;
  return cfg;
}

}  // namespace

TEST_CASE("K-functional bound of a constant") {
  const GridFunction one = gf({1, 1, 1, 1});
  const KFunctionalBound b = k_functional_bound(one, kP0, kP1, Net::full(), small_config());
  CHECK(b.norm0 == Approx(1.0));
  CHECK(b.norm1 == Approx(1.0));
  for (double t : {1e-3, 0.5, 1.0, 2.0, 1e3}) CHECK(b(t) == Approx(std::min(1.0, t)));
}

TEST_CASE("K-functional zero function") {
  const GridFunction z = gf({0, 0, 0});
  for (double t : {1e-2, 1.0, 1e2}) CHECK(k_functional_upper(z, t, kP0, kP1, Net::full()) == 0.0);
  InterpParams ip;
  ip.endpoint0 = {1.0, 1.0, 2.0};
  ip.endpoint1 = {1.0, 2.0, 2.0};
  CHECK(interpolation_norm_upper(z, ip, Net::full()).value == 0.0);
  CHECK(check_interpolation_embedding(z, ip, Net::full()).ratio == 0.0);
}

TEST_CASE("interpolation norm of the model K") {
  KFunctionalBound model;
  model.lines = {{0.0, 1.0}, {1.0, 0.0}};  // min(1, t)
  model.norm0 = 1.0;
  model.norm1 = 1.0;
  const InterpolationNorm r = interpolation_norm_of_bound(model, 0.5, 2.0);
  CHECK(r.value == Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.unit_window == Approx(1.0).epsilon(1e-12));
  // Against Simpson over log t, in pieces on either side of the kink.
  auto g = [](double u) {
    const double t = std::exp(u);
    return std::pow(std::pow(t, -0.5) * std::min(1.0, t), 2.0);
  };
  const double want = oracle::simpson(g, -40, 0, 20000) + oracle::simpson(g, 0, 40, 20000);
  CHECK(r.value * r.value == Approx(want).epsilon(1e-8));
}

TEST_CASE("K-functional properties") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    const auto v = oracle::random_values(rng, 3 + trial);
    const GridFunction f = gf(v);
    const KFuncConfig cfg = small_config();
    const KFunctionalBound b = k_functional_bound(f, kP0, kP1, Net::full(), cfg);
    double prev = 0.0;
    std::vector<double> ts;
    for (int k = -30; k <= 30; ++k) ts.push_back(std::pow(10.0, k / 5.0));
    for (double t : ts) {
      const double k = b(t);
      CHECK(k <= std::min(b.norm0, t * b.norm1) * (1 + 1e-14));
      CHECK(k >= prev * (1 - 1e-14));
      prev = k;
    }
    // Concavity along the grid: midpoint above the chord.
    for (std::size_t i = 1; i + 1 < ts.size(); ++i) {
      const double a = ts[i - 1], c = ts[i + 1], m = 0.5 * (a + c);
      CHECK(b(m) >= 0.5 * (b(a) + b(c)) * (1 - 1e-12));
    }
    // Enlarging the lambda grid never increases the bound.
    KFuncConfig finer = cfg;
    finer.lambda_grid = cfg.resolved_lambda_grid(f);
    for (double x : cfg.resolved_lambda_grid(f)) finer.lambda_grid.push_back(x * 1.37);
    std::sort(finer.lambda_grid.begin(), finer.lambda_grid.end());
    KFuncConfig coarse = cfg;
    coarse.lambda_grid = cfg.resolved_lambda_grid(f);
    const KFunctionalBound bf = k_functional_bound(f, kP0, kP1, Net::full(), finer);
    const KFunctionalBound bc = k_functional_bound(f, kP0, kP1, Net::full(), coarse);
    for (double t : ts) CHECK(bf(t) <= bc(t) * (1 + 1e-14));
    // Homogeneity.
    std::vector<double> s = v;
    for (double& x : s) x *= 2.5;
    const KFunctionalBound bs = k_functional_bound(gf(s), kP0, kP1, Net::full(), cfg);
    for (double t : ts) CHECK(bs(t) == Approx(2.5 * b(t)).epsilon(1e-9));
  }
}

TEST_CASE("interpolation embedding check") {
  InterpParams ip;
  ip.eta = 0.5;
  ip.q = 2.0;
  ip.endpoint0 = {1.0, 1.0, 2.0};
  ip.endpoint1 = {1.0, 2.0, 2.0};
  CHECK(ip.target_p() == Approx(4.0 / 3.0));
  const EmbeddingReport r = check_interpolation_embedding(gf({1, 1, 1, 1}), ip, Net::full());
  CHECK(std::isfinite(r.ratio));
  CHECK(r.ratio > 0);
  CHECK(r.p == Approx(4.0 / 3.0));
  CHECK(r.rhs_upper_unit <= r.rhs_upper);

  InterpParams bad = ip;
  bad.p = 1.5;
  CHECK_THROWS_AS(check_interpolation_embedding(gf({1, 1}), bad, Net::full()), Error);
  InterpParams swapped = ip;
  std::swap(swapped.endpoint0, swapped.endpoint1);
  CHECK_THROWS_AS(check_interpolation_embedding(gf({1, 1}), swapped, Net::full()), Error);
  InterpParams eta = ip;
  eta.eta = 1.0;
  CHECK_THROWS_AS(eta.validate(), Error);
}
