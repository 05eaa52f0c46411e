#include <doctest.h>

#include <cmath>
#include <random>

#include "grandnet/error.hpp"
#include "grandnet/norms.hpp"
#include "grandnet/numeric.hpp"
#include "grandnet/rearrange.hpp"
#include "oracles.hpp"

using namespace grandnet;
using doctest::Approx;

namespace {

GridFunction gf(std::vector<double> v) { return make_grid_function(v); }
const GridFunction kOne = gf({1, 1, 1, 1});

double gn_full(const GridFunction& f, double theta, double p, double q) {
  return grand_net_norm(f, Net::full(), {theta, p, q}).value;
}

/// Grand norm of a profile by the definition: the oracle's Simpson integral
/// inside a dense eps search.
double oracle_grand(const Profile& phi, double theta, double p, double q) {
  std::vector<double> breaks = phi.breakpoints();
  auto inner = [&](double s) {
    if (std::isinf(q)) {
      double best = 0.0;
      for (int k = 0; k <= 4000; ++k) {
        const double t = std::exp(-30.0 * k / 4000.0);
        best = std::max(best, std::pow(t, s) * phi(t));
      }
      for (double b : breaks)
        best = std::max(best, std::pow(b, s) * phi(b * (1 - 1e-15)));  // left limits, including t -> 1
      return best;
    }
    return std::pow(oracle::lorentz_integral([&](double t) { return phi(t); }, breaks, s, q), 1.0 / q);
  };
  if (theta == 0.0) return inner(1.0 / p);
  if (theta > 0)
    return oracle::extremum([&](double e) { return std::pow(e, theta) * inner(1.0 / p + e); }, 1.0, true, 1e-6, 150);
  return oracle::extremum([&](double e) { return std::pow(e, theta) * inner(1.0 / p - e); }, 1.0 / p, false, 1e-6,
                          150);
}

}  // namespace

TEST_CASE("classical net norms") {
  CHECK(net_norm(kOne, Net::full(), 2, kInf) == Approx(1.0));
  CHECK(net_norm(kOne, Net::full(), 2, 2) == Approx(1.0));
  CHECK(net_norm(gf({0, 0}), Net::full(), 2, 2) == 0.0);
  // Classical branch of the grand norm coincides.
  CHECK(gn_full(gf({3, -1, 2}), 0.0, 2, 2) == Approx(net_norm(gf({3, -1, 2}), Net::full(), 2, 2)));
}

TEST_CASE("grand net norm examples") {
  CHECK(gn_full(kOne, 1, 1, 1) == Approx(0.5).epsilon(1e-9));
  CHECK(gn_full(kOne, -1, 2, kInf) == Approx(2.0).epsilon(1e-9));
  CHECK(gn_full(kOne, 1, 2, 2) == Approx(1 / std::sqrt(3.0)).epsilon(1e-9));
  CHECK(gn_full(kOne, -1, 2, 2) == Approx(3 * std::sqrt(3.0)).epsilon(1e-8));
  const NormResult r = grand_net_norm(kOne, Net::full(), {-1, 2, 2});
  CHECK(r.eps == Approx(1.0 / 3.0).epsilon(1e-5));
  CHECK(r.branch == NormBranch::InfEps);
  CHECK(grand_net_norm(kOne, Net::full(), {1, 2, 2}).branch == NormBranch::SupEps);
  CHECK_THROWS_AS(grand_net_norm(kOne, Net::full(), {-1, kInf, 2}), Error);
}

TEST_CASE("grand Lorentz examples") {
  CHECK(grand_lorentz_norm(kOne, {0, 2, 2}, LorentzVariant::Star).value == Approx(1.0));
  CHECK(grand_lorentz_norm(gf({4, 0, 0, 0}), {0, 1, kInf}, LorentzVariant::Star).value == Approx(1.0));
  CHECK(grand_lorentz_norm(kOne, {-1, 2, kInf}, LorentzVariant::Star).value == Approx(2.0));
  // f* <= f** pointwise.
  const GridFunction f = gf({5, -1, 0.5, 2, 0});
  for (double theta : {-0.5, 0.0, 1.0})
    CHECK(grand_lorentz_norm(f, {theta, 2, 2}, LorentzVariant::Star).value <=
          grand_lorentz_norm(f, {theta, 2, 2}, LorentzVariant::DoubleStar).value + 1e-12);
}

TEST_CASE("critical epsilon") {
  CHECK(critical_epsilon(1, std::exp(-2.0), 1) == Approx(0.5));
  CHECK(critical_epsilon(2, std::exp(-1.0), 1) == 1.0);
  CHECK(critical_epsilon(-1, std::exp(-4.0), 0.5) == Approx(0.25));
  CHECK_THROWS_AS(critical_epsilon(1, 0.0, 1), Error);
  CHECK_THROWS_AS(critical_epsilon(1, 1.0, 1), Error);
}

TEST_CASE("log-weighted equivalents") {
  const NormResult u = equivalent_log_norm(kOne, Net::full(), {1, 1, kInf, LogWeight::Uniform});
  CHECK(u.value == Approx(1.0).epsilon(1e-9));
  const NormResult p = equivalent_log_norm(kOne, Net::full(), {1, 1, kInf, LogWeight::Paper});
  CHECK(p.infinite);
  CHECK(std::isinf(p.value));
}

TEST_CASE("grand norms match a definition-level oracle") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 4; ++trial) {
    const auto v = oracle::random_values(rng, 3 + trial);
    const GridFunction f = gf(v);
    const Profile full = full_net_profile(f);
    const Profile step = net_average_profile(f, Net::grid_intervals()).profile;
    for (const Profile* phi : {&full, &step})
      for (double theta : {-1.0, 0.0, 0.5, 2.0})
        for (double q : {1.0, 2.0, kInf}) {
          const double p = 2.0;
          const double got = grand_profile_norm(*phi, {theta, p, q}).value;
          const double want = oracle_grand(*phi, theta, p, q);
          INFO("theta=" << theta << " q=" << q << " trial=" << trial);
          INFO("got=" << got << " want=" << want);
          CHECK(oracle::close(got, want, 2e-5));
        }
  }
}

TEST_CASE("norm properties") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    const auto v = oracle::random_values(rng, 2 + trial);
    const GridFunction f = gf(v);
    std::vector<double> scaled = v;
    for (double& x : scaled) x *= 3.5;
    std::vector<double> neg = v;
    for (double& x : neg) x = -x;
    for (double theta : {-0.5, 0.0, 1.0}) {
      const SpaceParams sp{theta, 1.25, 2};
      const double base = grand_net_norm(f, Net::grid_intervals(), sp).value;
      CHECK(grand_net_norm(gf(scaled), Net::grid_intervals(), sp).value == Approx(3.5 * base).epsilon(1e-9));
      CHECK(grand_net_norm(gf(neg), Net::grid_intervals(), sp).value == Approx(base).epsilon(1e-12));
    }
    // theta-monotone on the sup branch: eps^theta decreases in theta.
    CHECK(gn_full(f, 1.0, 2, 2) <= gn_full(f, 0.5, 2, 2) + 1e-12);
    // eps cap restricts the sup.
    const NormResult capped = grand_profile_norm(full_net_profile(f), {1.0, 2, 2}, {}, 0.1);
    CHECK(capped.value <= gn_full(f, 1.0, 2, 2) + 1e-12);
    CHECK(capped.eps <= 0.1 + 1e-15);
  }
}

TEST_CASE("epsilon optimizer") {
  EpsilonSearch s;
  const auto peak = optimize_epsilon([](double e) { return e * std::exp(-10 * e); }, 1.0, Extremum::Sup, {}, s);
  CHECK(peak.eps == Approx(0.1).epsilon(1e-6));
  CHECK(peak.value == Approx(0.1 / M_E).epsilon(1e-12));
  const auto valley = optimize_epsilon([](double e) { return 1 / e + 4 * e; }, 1.0, Extremum::Inf, {}, s);
  CHECK(valley.value == Approx(4.0).epsilon(1e-12));
  EpsilonSearch bad;
  bad.grid_points = 1;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("weight bounds") {
  const auto [lo, hi] = uniform_weight_sup_bounds(1.0);
  CHECK(lo > 0);
  CHECK(lo <= hi);
  // Direct check of the bound on a t grid.
  for (int k = 1; k < 200; ++k) {
    const double t = std::exp(-k / 10.0);
    const double sup = oracle::extremum([&](double e) { return e * std::pow(t, e); }, 1.0, true);
    const double ratio = sup * (1 - std::log(t));
    CHECK(ratio >= lo * (1 - 1e-9));
    CHECK(ratio <= hi * (1 + 1e-9));
  }
  const double inf_lo = uniform_weight_inf_lower(1.0, 2.0);
  for (int k = 1; k < 200; ++k) {
    const double t = std::exp(-k / 10.0);
    const double inf = oracle::extremum([&](double e) { return std::pow(t, -e) / e; }, 0.5, false);
    CHECK(inf / (1 - std::log(t)) >= inf_lo * (1 - 1e-9));
  }
}
