#include <doctest.h>

#include <cmath>
#include <cstring>

#include "grandnet/error.hpp"
#include "grandnet/io.hpp"
#include "grandnet/verify.hpp"

using namespace grandnet;
using doctest::Approx;

namespace {

CorpusSpec small_corpus(std::size_t count = 12) {
  CorpusSpec cs;
  cs.count = count;
  cs.n_max = 8;
  return cs;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("corpus generation") {
  CorpusSpec cs;
  cs.count = 3;
  const auto a = generate_corpus(cs), b = generate_corpus(cs);
  REQUIRE(a.size() == 3);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].values() == b[i].values());

  cs.count = 40;
  const auto full = generate_corpus(cs);
  bool has_constant = false, has_alternating = false;
  for (const auto& f : full) {
    CHECK(f.n() >= cs.n_min);
    CHECK(f.n() <= cs.n_max);
    has_constant = has_constant || (f.values().array() == f[0]).all();
    bool alt = f.n() >= 2 && f.values().minCoeff() < 0 && f.values().maxCoeff() > 0;
    has_alternating = has_alternating || alt;
  }
  CHECK(has_constant);
  CHECK(has_alternating);

  CorpusSpec other = cs;
  other.seed = 2;
  CHECK(generate_corpus(other)[2].values() != full[2].values());

  CorpusSpec constants = cs;
  constants.mix = {CorpusKind::Constant};
  for (const auto& f : generate_corpus(constants)) CHECK((f.values().array() == f[0]).all());

  CorpusSpec pow2 = cs;
  pow2.power_of_two = true;
  for (const auto& f : generate_corpus(pow2)) CHECK(is_power_of_two(f.n()));

  CorpusSpec bad = cs;
  bad.count = 0;
  CHECK_THROWS_AS(bad.validate(), Error);
  CHECK(parse_corpus_kind(to_string(CorpusKind::Power)) == CorpusKind::Power);
  CHECK_THROWS_AS(parse_corpus_kind("gaussian"), Error);
}

TEST_CASE("power functions have exact cell averages") {
  const GridFunction f = power_function(4, 0.4);
  // Cell k average of t^-a is n ((k+1)/n)^(1-a) - (k/n)^(1-a)) / (1-a).
  for (int k = 0; k < 4; ++k) {
    const double want = 4.0 * (std::pow((k + 1) / 4.0, 0.6) - std::pow(k / 4.0, 0.6)) / 0.6;
    CHECK(f[k] == Approx(want).epsilon(1e-14));
  }
  CHECK(f.integral() == Approx(1.0 / 0.6).epsilon(1e-14));
  // Finite N_{2,q} norms for alpha < 1/2.
  CHECK(std::isfinite(net_norm(power_function(64, 0.4), Net::full(), 2.0, 1.0)));
}

TEST_CASE("suite examples") {
  SweepParams sw;
  CaseSpec s6;
  s6.suite = "S6";
  s6.relation = "holder";
  s6.params = {{"theta", 1.0}, {"p1", 2.0}, {"s1", 2.0}};
  s6.labels = {{"space", "gn:full"}};
  s6.functions = {Eigen::VectorXd::Ones(4), Eigen::VectorXd::Ones(4)};
  const CaseResult r6 = evaluate_case(s6, sw);
  CHECK(r6.lhs == Approx(1.0));
  CHECK(r6.rhs == Approx(3.0).epsilon(1e-8));
  CHECK(r6.pass);

  CaseSpec s7;
  s7.suite = "S7";
  s7.relation = "sandwich-right";
  s7.params = {{"t", 0.2}};
  s7.functions = {Eigen::Vector4d(1, 1, -1, -1)};
  const CaseResult r7 = evaluate_case(s7, sw);
  CHECK(r7.lhs == Approx(1.0));
  CHECK(r7.rhs == Approx(1.0));
  CHECK(r7.constant == 4.0);
  CHECK(r7.pass);
}

TEST_CASE("suite ids") {
  CHECK(suite_ids().size() == 11);
  CHECK_THROWS_AS(suite_title("S12"), Error);
  CHECK_THROWS_AS(run_suite("S0", generate_corpus(small_corpus()), {}), Error);
}

TEST_CASE("suites are deterministic and replayable") {
  const auto corpus = generate_corpus(small_corpus());
  for (const char* id : {"S1", "S3", "S6", "S7", "S8"}) {
    const SuiteReport a = run_suite(id, corpus);
    const SuiteReport b = run_suite(id, corpus);
    INFO(id);
    CHECK(a.passed());
    REQUIRE(a.cases.size() == b.cases.size());
    REQUIRE(!a.cases.empty());
    for (std::size_t i = 0; i < a.cases.size(); ++i) {
      CHECK(a.cases[i].hash == b.cases[i].hash);
      CHECK(same_bits(a.cases[i].result.lhs, b.cases[i].result.lhs));
      if (i > 0) CHECK(a.cases[i - 1].hash <= a.cases[i].hash);
    }
    // Replay a sample of cases through a JSON round trip.
    for (std::size_t i = 0; i < a.cases.size(); i += 1 + a.cases.size() / 7) {
      const SuiteCase& c = a.cases[i];
      const CaseSpec back = case_spec_from_json(json::parse(to_json(c.spec).dump()));
      CHECK(back.hash() == c.hash);
      const CaseResult r = evaluate_case(back);
      CHECK(same_bits(r.lhs, c.result.lhs));
      CHECK(same_bits(r.rhs, c.result.rhs));
      CHECK(r.pass == c.result.pass);
    }
  }
}

TEST_CASE("pass rule") {
  const auto corpus = generate_corpus(small_corpus(6));
  const SuiteReport rep = run_suite("S6", corpus);
  for (const auto& c : rep.cases) {
    const auto& r = c.result;
    if (std::isinf(r.rhs) || std::isinf(r.constant)) continue;
    CHECK(r.pass == (r.lhs <= r.constant * r.rhs + r.abs_tol));
  }
  // Every S6 case pairs f with another corpus function and is judged with constant 1.
  for (const auto& c : rep.cases) CHECK(c.result.constant == 1.0);
}

TEST_CASE("an impossible tolerance makes a suite fail with replayable cases") {
  SweepParams sw;
  sw.abs_tol = -1.0;  // demands lhs <= rhs - 1
  const auto corpus = generate_corpus(small_corpus(4));
  const SuiteReport rep = run_suite("S1", corpus, sw);
  CHECK_FALSE(rep.passed());
  const auto& first = *std::find_if(rep.cases.begin(), rep.cases.end(),
                                    [&](const SuiteCase& c) { return c.hash == rep.failures.front(); });
  const CaseResult again = evaluate_case(first.spec, sw);
  CHECK_FALSE(again.pass);
  CHECK(same_bits(again.lhs, first.result.lhs));
}
