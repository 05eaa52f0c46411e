#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "grandnet/grid.hpp"
#include "grandnet/interp.hpp"
#include "grandnet/norms.hpp"
#include "grandnet/numeric.hpp"

namespace grandnet {

enum class CorpusKind { Constant, AlternatingBlocks, RandomSigned, RandomNonnegative, Power, IndicatorBlocks };
const char* to_string(CorpusKind k);
CorpusKind parse_corpus_kind(const std::string& s);

struct CorpusSpec {
  std::size_t count = 50;
  int n_min = 1;
  int n_max = 32;
  /// Draw resolutions from the powers of two in [n_min, n_max] only.
  bool power_of_two = false;
  std::vector<CorpusKind> mix{CorpusKind::Constant,          CorpusKind::AlternatingBlocks, CorpusKind::RandomSigned,
                              CorpusKind::RandomNonnegative, CorpusKind::Power,             CorpusKind::IndicatorBlocks};
  std::uint64_t seed = 1;
  /// Power profiles t^-alpha use alpha < 1/p_max so every N_{p,q} norm with p <= p_max stays finite.
  double p_max = 4.0;

  void validate() const;
};

/// Deterministic corpus; kinds are taken round-robin from `mix`, so every kind
/// appears once `count` reaches the mix size.
std::vector<GridFunction> generate_corpus(const CorpusSpec& spec);

/// Exact cell averages of t^-alpha on an n-cell grid.
GridFunction power_function(int n, double alpha);

/// Parameter sweep shared by the suites.
struct SweepParams {
  std::vector<double> p{1.25, 2.0, 4.0};
  std::vector<double> q{1.0, 2.0, kInf};
  std::vector<double> theta{0.0, 0.5, 1.0, 2.0};  // magnitudes; negatives are added where defined
  std::vector<double> delta{0.1, 0.5};
  LogWeight weight = LogWeight::Uniform;
  EpsilonSearch search{};
  KFuncConfig kfunc{};
  double abs_tol = 1e-9;
  /// Relative tolerance of the equality checks (kernel identities, operator swap).
  double equality_tol = 1e-9;
  /// Allowed relative drift of interpolation ratios under grid doubling.
  double refinement_tol = 0.05;
  /// Random kernels for the operator suite.
  int kernel_count = 20;
  int kernel_n = 8;
};

/// One replayable check: everything needed to recompute lhs, rhs and the constant.
struct CaseSpec {
  std::string suite;
  std::string relation;
  std::map<std::string, double> params;
  std::map<std::string, std::string> labels;  // nets, variants
  std::vector<Eigen::VectorXd> functions;
  std::optional<Eigen::MatrixXd> kernel;
  std::vector<std::vector<int>> sets;  // explicit net members, if any

  std::uint64_t hash() const;
};

struct CaseResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double constant = 1.0;
  double abs_tol = 0.0;
  bool pass = false;
  /// lhs / rhs when rhs > 0.
  double observed = 0.0;
};

struct SuiteCase {
  CaseSpec spec;
  CaseResult result;
  std::uint64_t hash = 0;
};

struct SuiteReport {
  std::string id;
  std::string title;
  std::vector<SuiteCase> cases;  // sorted by hash
  /// Largest observed lhs / rhs over the cases, per relation.
  std::map<std::string, double> worst_constant;
  std::vector<std::uint64_t> failures;

  bool passed() const { return failures.empty(); }
};

const std::vector<std::string>& suite_ids();
std::string suite_title(const std::string& id);

/// Evaluates a single case from scratch. Bit-identical to the value recorded by run_suite.
CaseResult evaluate_case(const CaseSpec& spec, const SweepParams& sweep = {});

/// All cases of a suite for the corpus and sweep, without evaluating them.
std::vector<CaseSpec> suite_cases(const std::string& id, const std::vector<GridFunction>& corpus,
                                  const SweepParams& sweep = {});

SuiteReport run_suite(const std::string& id, const std::vector<GridFunction>& corpus, const SweepParams& sweep = {});

/// Worker count: GRANDNET_THREADS if set, else hardware concurrency.
unsigned worker_count();

}  // namespace grandnet
