// grandnet command-line front end: norms, profiles, K-functionals, operator
// certificates and the verification suites.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grandnet/error.hpp"
#include "grandnet/interp.hpp"
#include "grandnet/io.hpp"
#include "grandnet/netavg.hpp"
#include "grandnet/norms.hpp"
#include "grandnet/numeric.hpp"
#include "grandnet/opkernel.hpp"
#include "grandnet/rearrange.hpp"
#include "grandnet/verify.hpp"

using namespace grandnet;

namespace {

constexpr const char* kVersion = "0.1.0";

double parse_real(const std::string& s, const std::string& flag) {
  if (s == "inf" || s == "infinity" || s == "Inf") return kInf;
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidInput, flag + ": expected a number or 'inf', got '" + s + "'");
}

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Net parse_net(const std::string& id) {
  if (id == "full") return Net::full();
  if (id == "dyadic") return Net::dyadic();
  if (id == "grid-intervals") return Net::grid_intervals();
  throw Error(ErrorKind::InvalidInput, "--net: unknown net '" + id + "'");
}

struct InputOpts {
  std::string path;
  std::string values;

  void add(CLI::App* sub) {
    sub->add_option("--input", path, "GridFunction JSON file {\"n\", \"values\"}");
    sub->add_option("--values", values, "comma-separated cell values (instead of --input)");
  }
  GridFunction load() const {
    if (!path.empty() && !values.empty()) throw Error(ErrorKind::InvalidInput, "give either --input or --values");
    if (!path.empty()) {
      try {
        return grid_function_from_json(read_json_file(path));
      } catch (const Error& e) {
        if (e.message().rfind(path, 0) == 0) throw;
        throw Error(e.kind(), path + ": " + e.message());
      }
    }
    if (values.empty()) throw Error(ErrorKind::InvalidInput, "an input function is required (--input or --values)");
    std::vector<double> v;
    std::stringstream ss(values);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_real(item, "--values"));
    return make_grid_function(v);
  }
};

struct SearchOpts {
  EpsilonSearch search{};

  void add(CLI::App* sub) {
    sub->add_option("--eps-floor", search.eps_floor, "smallest epsilon sampled")->capture_default_str();
    sub->add_option("--grid-points", search.grid_points, "log-spaced epsilon samples")->capture_default_str();
    sub->add_option("--refine-rounds", search.refine_rounds, "golden-section refinements")->capture_default_str();
    sub->add_option("--rel-tol", search.rel_tol, "relative tolerance of the search")->capture_default_str();
    sub->add_option("--quad-order", search.quad.order, "Gauss-Legendre order")->capture_default_str();
    sub->add_option("--quad-subdivisions", search.quad.subdivisions, "panels per curved segment")
        ->capture_default_str();
  }
};

struct KFuncOpts {
  KFuncConfig cfg{};
  std::string families = "truncation,scaling";

  void add(CLI::App* sub) {
    sub->add_option("--t-points", cfg.t_points, "log-spaced t samples")->capture_default_str();
    sub->add_option("--t-min", cfg.t_min)->capture_default_str();
    sub->add_option("--t-max", cfg.t_max)->capture_default_str();
    sub->add_option("--lambda-points", cfg.lambda_points, "truncation levels")->capture_default_str();
    sub->add_option("--scaling-points", cfg.scaling_points)->capture_default_str();
    sub->add_option("--families", families, "decomposition families")->capture_default_str();
  }
  KFuncConfig resolve(const EpsilonSearch& search) {
    KFuncConfig out = cfg;
    out.search = search;
    out.families.clear();
    std::stringstream ss(families);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item == "truncation") out.families.push_back(DecompositionFamily::Truncation);
      else if (item == "scaling") out.families.push_back(DecompositionFamily::Scaling);
      else throw Error(ErrorKind::InvalidInput, "--families: unknown family '" + item + "'");
    }
    out.validate();
    return out;
  }
};

json metadata(const std::string& command, const EpsilonSearch& search, LogWeight weight) {
  return json{{"tool", "grandnet"},
              {"version", kVersion},
              {"command", command},
              {"weight", to_string(weight)},
              {"tolerances", to_json(search)}};
}

void emit(const std::string& out, const std::string& content) {
  if (out.empty() || out == "-") {
    std::cout << content;
  } else {
    write_file_atomic(out, content);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// JSON config: keys are long flag names of the chosen subcommand; explicit flags win.
std::vector<std::string> merge_config(CLI::App& app, std::vector<std::string> args) {
  std::string config_path;
  for (auto it = args.begin(); it != args.end();) {
    if (*it == "--config" && it + 1 != args.end()) {
      config_path = *(it + 1);
      it = args.erase(it, it + 2);
    } else if (it->rfind("--config=", 0) == 0) {
      config_path = it->substr(9);
      it = args.erase(it);
    } else {
      ++it;
    }
  }
  if (config_path.empty()) return args;
  const json cfg = read_json_file(config_path);
  if (!cfg.is_object()) throw Error(ErrorKind::InvalidInput, config_path + ": config must be a JSON object");

  auto sub_it = std::find_if(args.begin(), args.end(), [](const std::string& a) { return a.rfind("-", 0) != 0; });
  if (sub_it == args.end()) throw Error(ErrorKind::InvalidInput, "a subcommand is required with --config");
  CLI::App* sub = app.get_subcommand_no_throw(*sub_it);
  if (sub == nullptr) throw Error(ErrorKind::InvalidInput, "unknown subcommand '" + *sub_it + "'");

  std::vector<std::string> extra;
  for (const auto& [key, value] : cfg.items()) {
    const std::string flag = "--" + key;
    if (sub->get_option_no_throw(flag) == nullptr)
      throw Error(ErrorKind::InvalidInput, config_path + ": unknown key '" + key + "' for " + *sub_it);
    const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (given) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) extra.push_back(flag);
    } else if (value.is_string()) {
      extra.push_back(flag);
      extra.push_back(value.get<std::string>());
    } else if (value.is_number()) {
      extra.push_back(flag);
      extra.push_back(value.is_number_integer() ? std::to_string(value.get<long long>()) : fmt(value.get<double>()));
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& v : value) {
        if (!joined.empty()) joined += ',';
        joined += v.is_string() ? v.get<std::string>() : v.dump();
      }
      extra.push_back(flag);
      extra.push_back(joined);
    } else {
      throw Error(ErrorKind::InvalidInput, config_path + ": key '" + key + "' has an unsupported value");
    }
  }
  args.insert(sub_it + 1, extra.begin(), extra.end());
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grand net and grand Lorentz norms, K-functionals and operator bounds on grids", "grandnet"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  std::string out;
  app.add_option("--config", "JSON file with flag values; explicit flags win");

  // norm
  auto* norm_cmd = app.add_subcommand("norm", "norm of a grid function (JSON)");
  InputOpts norm_in;
  norm_in.add(norm_cmd);
  SearchOpts norm_search;
  norm_search.add(norm_cmd);
  std::string norm_space = "gn", norm_net = "full", norm_weight = "uniform", norm_p = "2", norm_q = "2";
  double norm_theta = 0.0, norm_eps_cap = 0.0;
  norm_cmd->add_option("--space", norm_space, "gn | gl-star | gl-dstar | net | log")->capture_default_str();
  norm_cmd->add_option("--net", norm_net, "full | dyadic | grid-intervals")->capture_default_str();
  norm_cmd->add_option("--theta", norm_theta)->capture_default_str();
  norm_cmd->add_option("--p", norm_p)->capture_default_str();
  norm_cmd->add_option("--q", norm_q)->capture_default_str();
  norm_cmd->add_option("--weight", norm_weight, "uniform | paper")->capture_default_str();
  norm_cmd->add_option("--eps-cap", norm_eps_cap, "restrict the shift range to (0, cap]")->capture_default_str();

  // avg
  auto* avg_cmd = app.add_subcommand("avg", "average function fbar(t, M) as CSV segments t_lo,t_hi,a,b (a + b/t)");
  InputOpts avg_in;
  avg_in.add(avg_cmd);
  std::string avg_net = "full";
  avg_cmd->add_option("--net", avg_net)->capture_default_str();

  // rearrange
  auto* re_cmd = app.add_subcommand("rearrange", "f* and f** at the cell ends as CSV t,f_star,f_double_star");
  InputOpts re_in;
  re_in.add(re_cmd);

  // kfunc
  auto* kf_cmd = app.add_subcommand("kfunc", "upper bound on K(t, f; X0, X1) as CSV t,k_upper");
  InputOpts kf_in;
  kf_in.add(kf_cmd);
  SearchOpts kf_search;
  kf_search.add(kf_cmd);
  KFuncOpts kf_opts;
  kf_opts.add(kf_cmd);
  std::string kf_net = "full", kf_weight = "uniform", kf_p0 = "1", kf_q0 = "inf", kf_p1 = "2", kf_q1 = "inf";
  double kf_theta0 = 0.0, kf_theta1 = 0.0;
  kf_cmd->add_option("--net", kf_net)->capture_default_str();
  kf_cmd->add_option("--theta0", kf_theta0)->capture_default_str();
  kf_cmd->add_option("--p0", kf_p0)->capture_default_str();
  kf_cmd->add_option("--q0", kf_q0)->capture_default_str();
  kf_cmd->add_option("--theta1", kf_theta1)->capture_default_str();
  kf_cmd->add_option("--p1", kf_p1)->capture_default_str();
  kf_cmd->add_option("--q1", kf_q1)->capture_default_str();
  kf_cmd->add_option("--weight", kf_weight)->capture_default_str();

  // interp-check
  auto* ic_cmd = app.add_subcommand("interp-check", "interpolation embedding consistency report (JSON)");
  InputOpts ic_in;
  ic_in.add(ic_cmd);
  SearchOpts ic_search;
  ic_search.add(ic_cmd);
  KFuncOpts ic_opts;
  ic_opts.add(ic_cmd);
  std::string ic_net = "full";
  double ic_theta = 1.0, ic_p0 = 1.0, ic_p1 = 2.0, ic_q0 = 2.0, ic_q1 = 2.0, ic_eta = 0.5, ic_q = 2.0;
  ic_cmd->add_option("--net", ic_net)->capture_default_str();
  ic_cmd->add_option("--theta", ic_theta)->capture_default_str();
  ic_cmd->add_option("--p0", ic_p0)->capture_default_str();
  ic_cmd->add_option("--q0", ic_q0)->capture_default_str();
  ic_cmd->add_option("--p1", ic_p1)->capture_default_str();
  ic_cmd->add_option("--q1", ic_q1)->capture_default_str();
  ic_cmd->add_option("--eta", ic_eta)->capture_default_str();
  ic_cmd->add_option("--q", ic_q)->capture_default_str();

  // certify
  auto* cert_cmd = app.add_subcommand("certify", "operator boundedness criterion and empirical lower bound (JSON)");
  std::string cert_kernel, cert_net = "grid-intervals", cert_source = "lp", cert_target = "weighted-sup",
                           cert_weight = "uniform", cert_q = "2";
  double cert_theta = 0.0, cert_p = 2.0, cert_theta1 = 0.0;
  std::size_t cert_count = 0;
  std::uint64_t cert_seed = 1;
  SearchOpts cert_search;
  cert_search.add(cert_cmd);
  cert_cmd->add_option("--kernel", cert_kernel, "Kernel JSON file {\"nx\", \"ny\", \"values\"}")->required();
  cert_cmd->add_option("--net", cert_net, "net over the y-grid")->capture_default_str();
  cert_cmd->add_option("--q", cert_q)->capture_default_str();
  cert_cmd->add_option("--theta", cert_theta, "target theta >= 0")->capture_default_str();
  cert_cmd->add_option("--source", cert_source, "lp | gl (GL^theta1_{p,1})")->capture_default_str();
  cert_cmd->add_option("--p", cert_p, "source exponent in (1, inf)")->capture_default_str();
  cert_cmd->add_option("--theta1", cert_theta1, "source theta for --source gl")->capture_default_str();
  cert_cmd->add_option("--target", cert_target, "weighted-sup | grand")->capture_default_str();
  cert_cmd->add_option("--weight", cert_weight)->capture_default_str();
  cert_cmd->add_option("--corpus-count", cert_count, "extra seeded test functions")->capture_default_str();
  cert_cmd->add_option("--seed", cert_seed)->capture_default_str();

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "run inequality suites; exit 2 on any failure");
  std::string ver_suite = "all", ver_replay;
  CorpusSpec ver_corpus;
  SweepParams ver_sweep;
  bool ver_all_cases = false;
  ver_cmd->add_option("--suite", ver_suite, "all or a comma list of S1..S11")->capture_default_str();
  ver_cmd->add_option("--seed", ver_corpus.seed)->capture_default_str();
  ver_cmd->add_option("--count", ver_corpus.count)->capture_default_str();
  ver_cmd->add_option("--n-min", ver_corpus.n_min)->capture_default_str();
  ver_cmd->add_option("--n-max", ver_corpus.n_max)->capture_default_str();
  ver_cmd->add_option("--p-max", ver_corpus.p_max)->capture_default_str();
  ver_cmd->add_option("--kernel-count", ver_sweep.kernel_count)->capture_default_str();
  ver_cmd->add_option("--abs-tol", ver_sweep.abs_tol)->capture_default_str();
  ver_cmd->add_flag("--all-cases", ver_all_cases, "list every case result in the report");
  ver_cmd->add_option("--replay", ver_replay, "re-run one failed case saved from a report");
  SearchOpts ver_search;
  ver_search.add(ver_cmd);

  for (CLI::App* sub : app.get_subcommands({}))
    sub->add_option("--out", out, "output file, written atomically (default stdout)");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = merge_config(app, std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*norm_cmd) {
      const GridFunction f = norm_in.load();
      const SpaceParams sp{norm_theta, parse_real(norm_p, "--p"), parse_real(norm_q, "--q"),
                           parse_log_weight(norm_weight)};
      sp.validate();
      const EpsilonSearch& search = norm_search.search;
      search.validate();
      NormResult r;
      json j{{"metadata", metadata("norm", search, sp.weight)}, {"space", norm_space}};
      if (norm_space == "gn" || norm_space == "net" || norm_space == "log") {
        const Net net = parse_net(norm_net);
        const Profile phi = net_average_profile(f, net).profile;
        j["net"] = net.id();
        if (norm_space == "gn") {
          r = grand_profile_norm(phi, sp, search, norm_eps_cap);
        } else if (norm_space == "net") {
          const double v = profile_net_norm(phi, sp.p, sp.q, search.quad);
          r.value = v;
          r.infinite = std::isinf(v);
        } else {
          r = equivalent_log_profile_norm(phi, sp, search.quad);
        }
      } else if (norm_space == "gl-star" || norm_space == "gl-dstar") {
        const Rearrangement re(f);
        r = grand_profile_norm(norm_space == "gl-star" ? re.star_profile() : re.double_star_profile(), sp, search,
                               norm_eps_cap);
      } else {
        throw Error(ErrorKind::InvalidInput, "--space: unknown space '" + norm_space + "'");
      }
      j["params"] = to_json(sp);
      if (norm_eps_cap > 0) j["params"]["eps_cap"] = norm_eps_cap;
      j["result"] = to_json(r);
      emit(out, dump(j));
    } else if (*avg_cmd) {
      const GridFunction f = avg_in.load();
      const AvgProfile prof = net_average_profile(f, parse_net(avg_net));
      std::string csv = "t_lo,t_hi,a,b\n";
      for (const auto& s : prof.profile.segments())
        csv += fmt(s.lo) + ',' + fmt(s.hi) + ',' + fmt(s.a) + ',' + fmt(s.b) + '\n';
      emit(out, csv);
    } else if (*re_cmd) {
      const GridFunction f = re_in.load();
      const Rearrangement re(f);
      std::string csv = "t,f_star,f_double_star\n";
      for (Eigen::Index k = 1; k <= re.n(); ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(re.n());
        csv += fmt(t) + ',' + fmt(re.sorted_values()(k - 1)) + ',' + fmt(re.double_star(t)) + '\n';
      }
      emit(out, csv);
    } else if (*kf_cmd) {
      const GridFunction f = kf_in.load();
      const LogWeight w = parse_log_weight(kf_weight);
      const SpaceParams p0{kf_theta0, parse_real(kf_p0, "--p0"), parse_real(kf_q0, "--q0"), w};
      const SpaceParams p1{kf_theta1, parse_real(kf_p1, "--p1"), parse_real(kf_q1, "--q1"), w};
      p0.validate();
      p1.validate();
      const KFuncConfig cfg = kf_opts.resolve(kf_search.search);
      const KFunctionalBound bound = k_functional_bound(f, p0, p1, parse_net(kf_net), cfg);
      std::string csv = "t,k_upper\n";
      for (double t : cfg.resolved_t_grid()) csv += fmt(t) + ',' + fmt(bound(t)) + '\n';
      emit(out, csv);
    } else if (*ic_cmd) {
      const GridFunction f = ic_in.load();
      InterpParams ip;
      ip.eta = ic_eta;
      ip.q = ic_q;
      ip.endpoint0 = SpaceParams{ic_theta, ic_p0, ic_q0};
      ip.endpoint1 = SpaceParams{ic_theta, ic_p1, ic_q1};
      const KFuncConfig cfg = ic_opts.resolve(ic_search.search);
      const Net net = parse_net(ic_net);
      const EmbeddingReport r = check_interpolation_embedding(f, ip, net, cfg);
      json j{{"metadata", metadata("interp-check", cfg.search, LogWeight::Uniform)},
             {"net", net.id()},
             {"params",
              {{"theta", ic_theta},
               {"p0", ic_p0},
               {"q0", ic_q0},
               {"p1", ic_p1},
               {"q1", ic_q1},
               {"eta", ic_eta},
               {"q", ic_q},
               {"lambda_points", cfg.lambda_points},
               {"t_points", cfg.t_points}}},
             {"report", to_json(r)}};
      emit(out, dump(j));
    } else if (*cert_cmd) {
      const Kernel k = [&] {
        try {
          return kernel_from_json(read_json_file(cert_kernel));
        } catch (const Error& e) {
          if (e.message().rfind(cert_kernel, 0) == 0) throw;
          throw Error(e.kind(), cert_kernel + ": " + e.message());
        }
      }();
      const LogWeight w = parse_log_weight(cert_weight);
      const double q = parse_real(cert_q, "--q");
      const EpsilonSearch& search = cert_search.search;
      search.validate();
      AssociateNorm source;
      if (cert_source == "lp") source = AssociateNorm::lebesgue(cert_p);
      else if (cert_source == "gl") source = AssociateNorm::grand_lorentz(cert_theta1, cert_p);
      else throw Error(ErrorKind::InvalidInput, "--source: expected lp or gl");
      source.validate();
      const Net net = parse_net(cert_net);
      TargetNorm target;
      target.net = net;
      target.q = q;
      target.theta = cert_theta;
      target.weight = w;
      target.search = search;
      if (cert_target == "grand") target.kind = TargetNorm::Kind::Grand;
      else if (cert_target != "weighted-sup") throw Error(ErrorKind::InvalidInput, "--target: expected weighted-sup or grand");
      std::vector<GridFunction> corpus;
      if (cert_count > 0) {
        CorpusSpec cs;
        cs.count = cert_count;
        cs.seed = cert_seed;
        cs.n_min = cs.n_max = static_cast<int>(k.nx());
        corpus = generate_corpus(cs);
      }
      const double crit = boundedness_criterion(k, net, q, cert_theta, source, w, search);
      const EmpiricalNorm emp = empirical_operator_norm(k, source, target, corpus);
      json j{{"metadata", metadata("certify", search, w)},
             {"criterion", number_or_inf(crit)},
             {"empirical_lower_bound", number_or_inf(emp.value)},
             {"ratio", crit > 0 && std::isfinite(crit) ? json(emp.value / crit) : json(nullptr)},
             {"weight_variant", to_string(w)},
             {"parameters",
              {{"nx", k.nx()},
               {"ny", k.ny()},
               {"net", net.id()},
               {"q", number_or_inf(q)},
               {"theta", cert_theta},
               {"source", source.kind == AssociateNorm::Kind::Lebesgue ? "lp" : "gl"},
               {"associate_norm", source.id()},
               {"p", cert_p},
               {"theta1", cert_theta1},
               {"target", cert_target},
               {"corpus_count", cert_count},
               {"seed", cert_seed}}},
             {"candidates", emp.candidates},
             {"attained_by_extremal", emp.attained_by_extremal}};
      emit(out, dump(j));
    } else if (*ver_cmd) {
      ver_sweep.search = ver_search.search;
      json meta = metadata("verify", ver_sweep.search, ver_sweep.weight);
      meta["tolerances"]["abs_tol"] = ver_sweep.abs_tol;
      meta["tolerances"]["equality_tol"] = ver_sweep.equality_tol;
      meta["tolerances"]["refinement_tol"] = ver_sweep.refinement_tol;
      if (!ver_replay.empty()) {
        const json saved = read_json_file(ver_replay);
        // Accepts a whole verify report, a single suite report or a bare case.
        const json* node = &saved;
        if (saved.contains("suites")) {
          node = nullptr;
          for (const auto& s : saved["suites"])
            if (!s["failed_cases"].empty()) {
              node = &s;
              break;
            }
          if (node == nullptr) throw Error(ErrorKind::InvalidInput, ver_replay + ": report has no failed cases");
        }
        if (node->contains("failed_cases")) {
          if ((*node)["failed_cases"].empty())
            throw Error(ErrorKind::InvalidInput, ver_replay + ": report has no failed cases");
          node = &(*node)["failed_cases"][0];
        }
        const CaseSpec spec = case_spec_from_json(*node);
        const CaseResult r = evaluate_case(spec, ver_sweep);
        json j{{"metadata", meta}, {"case", to_json(spec)}, {"result", to_json(r)}};
        emit(out, dump(j));
        return r.pass ? 0 : 2;
      }
      std::vector<std::string> ids;
      if (ver_suite == "all") {
        ids = suite_ids();
      } else {
        std::stringstream ss(ver_suite);
        std::string item;
        while (std::getline(ss, item, ',')) {
          suite_title(item);
          ids.push_back(item);
        }
      }
      const auto corpus = generate_corpus(ver_corpus);
      json suites = json::array();
      bool all_pass = true;
      for (const auto& id : ids) {
        const SuiteReport rep = run_suite(id, corpus, ver_sweep);
        all_pass = all_pass && rep.passed();
        std::cerr << id << ": " << (rep.passed() ? "pass" : "FAIL") << " (" << rep.cases.size() << " cases, "
                  << rep.failures.size() << " failures)\n";
        suites.push_back(to_json(rep, ver_all_cases));
      }
      json j{{"metadata", meta},
             {"corpus",
              {{"seed", ver_corpus.seed},
               {"count", ver_corpus.count},
               {"n_min", ver_corpus.n_min},
               {"n_max", ver_corpus.n_max},
               {"p_max", ver_corpus.p_max}}},
             {"passed", all_pass},
             {"suites", suites}};
      emit(out, dump(j));
      return all_pass ? 0 : 2;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
