#include "grandnet/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "grandnet/error.hpp"
#include "grandnet/numeric.hpp"

namespace grandnet {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw Error(ErrorKind::InvalidInput, std::string("missing field '") + name + "'");
  return *it;
}

std::vector<double> number_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "field '" + where + "': expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number())
      throw Error(ErrorKind::InvalidInput, "field '" + where + "[" + std::to_string(i) + "]': expected a number");
    out.push_back(j[i].get<double>());
  }
  return out;
}

int positive_int(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer() || v.get<long long>() < 1)
    throw Error(ErrorKind::InvalidInput, std::string("field '") + name + "': expected a positive integer");
  return static_cast<int>(v.get<long long>());
}

std::string hex(std::uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

GridFunction grid_function_from_json(const json& j) {
  const std::vector<double> values = number_array(field(j, "values"), "values");
  if (j.contains("n") && positive_int(j, "n") != static_cast<int>(values.size()))
    throw Error(ErrorKind::InvalidInput, "field 'n' does not match the number of values");
  return make_grid_function(values);
}

json to_json(const GridFunction& f) {
  return json{{"n", f.n()}, {"values", std::vector<double>(f.values().begin(), f.values().end())}};
}

Kernel kernel_from_json(const json& j) {
  const int nx = positive_int(j, "nx");
  const int ny = positive_int(j, "ny");
  const json& rows = field(j, "values");
  if (!rows.is_array() || static_cast<int>(rows.size()) != nx)
    throw Error(ErrorKind::InvalidInput, "field 'values': expected nx = " + std::to_string(nx) + " rows");
  Eigen::MatrixXd m(nx, ny);
  for (int i = 0; i < nx; ++i) {
    const auto row = number_array(rows[i], "values[" + std::to_string(i) + "]");
    if (static_cast<int>(row.size()) != ny)
      throw Error(ErrorKind::InvalidInput,
                  "field 'values[" + std::to_string(i) + "]': expected ny = " + std::to_string(ny) + " entries");
    for (int c = 0; c < ny; ++c) m(i, c) = row[c];
  }
  return Kernel(std::move(m));
}

json to_json(const Kernel& k) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < k.nx(); ++i) {
    const Eigen::VectorXd r = k.values().row(i).transpose();
    rows.push_back(std::vector<double>(r.begin(), r.end()));
  }
  return json{{"nx", k.nx()}, {"ny", k.ny()}, {"values", rows}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::InvalidInput, path + ": cannot write file");
    out << content;
    if (!out.flush()) throw Error(ErrorKind::InvalidInput, path + ": write failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error(ErrorKind::InvalidInput, path + ": " + ec.message());
  }
}

json number_or_inf(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double number_from_json(const json& j, const std::string& name) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
  }
  throw Error(ErrorKind::InvalidInput, "field '" + name + "': expected a number or \"inf\"");
}

json to_json(const NormResult& r) {
  return json{{"value", number_or_inf(r.infinite ? kInf : r.value)},
              {"infinite", r.infinite},
              {"eps", r.eps},
              {"gap", r.gap},
              {"branch", to_string(r.branch)}};
}

json to_json(const SpaceParams& p) {
  return json{{"theta", p.theta}, {"p", number_or_inf(p.p)}, {"q", number_or_inf(p.q)}, {"weight", to_string(p.weight)}};
}

json to_json(const EpsilonSearch& s) {
  return json{{"eps_floor", s.eps_floor},
              {"grid_points", s.grid_points},
              {"refine_rounds", s.refine_rounds},
              {"rel_tol", s.rel_tol},
              {"quad_order", s.quad.order},
              {"quad_subdivisions", s.quad.subdivisions}};
}

json to_json(const EmbeddingReport& r) {
  return json{{"p", r.p},
              {"lhs", number_or_inf(r.lhs)},
              {"rhs_upper", number_or_inf(r.rhs_upper)},
              {"rhs_upper_unit_window", number_or_inf(r.rhs_upper_unit)},
              {"ratio", number_or_inf(r.ratio)}};
}

json to_json(const CaseSpec& c) {
  json params = json::object();
  for (const auto& [k, v] : c.params) params[k] = number_or_inf(v);
  json j{{"suite", c.suite}, {"relation", c.relation}, {"params", params}, {"labels", c.labels}};
  json fs = json::array();
  for (const auto& f : c.functions) fs.push_back(std::vector<double>(f.begin(), f.end()));
  j["functions"] = fs;
  if (c.kernel) j["kernel"] = to_json(Kernel(*c.kernel));
  if (!c.sets.empty()) j["sets"] = c.sets;
  return j;
}

CaseSpec case_spec_from_json(const json& j) {
  CaseSpec c;
  c.suite = field(j, "suite").get<std::string>();
  c.relation = field(j, "relation").get<std::string>();
  for (const auto& [k, v] : field(j, "params").items()) c.params[k] = number_from_json(v, "params." + k);
  if (j.contains("labels"))
    for (const auto& [k, v] : j["labels"].items()) c.labels[k] = v.get<std::string>();
  if (j.contains("functions"))
    for (std::size_t i = 0; i < j["functions"].size(); ++i) {
      const auto v = number_array(j["functions"][i], "functions[" + std::to_string(i) + "]");
      c.functions.push_back(Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size())));
    }
  if (j.contains("kernel")) c.kernel = kernel_from_json(j["kernel"]).values();
  if (j.contains("sets")) c.sets = j["sets"].get<std::vector<std::vector<int>>>();
  return c;
}

json to_json(const CaseResult& r) {
  return json{{"lhs", number_or_inf(r.lhs)},     {"rhs", number_or_inf(r.rhs)},
              {"constant", number_or_inf(r.constant)}, {"abs_tol", r.abs_tol},
              {"observed", r.observed},          {"pass", r.pass}};
}

json to_json(const SuiteReport& r, bool all_cases) {
  json worst = json::object();
  for (const auto& [k, v] : r.worst_constant) worst[k] = v;
  json failures = json::array();
  json cases = json::array();
  for (const SuiteCase& c : r.cases) {
    if (!c.result.pass) {
      json f = to_json(c.spec);
      f["hash"] = hex(c.hash);
      f["result"] = to_json(c.result);
      failures.push_back(f);
    }
    if (all_cases) {
      json e{{"hash", hex(c.hash)}, {"relation", c.spec.relation}};
      json params = json::object();
      for (const auto& [k, v] : c.spec.params) params[k] = number_or_inf(v);
      e["params"] = params;
      e["labels"] = c.spec.labels;
      e["result"] = to_json(c.result);
      cases.push_back(e);
    }
  }
  json j{{"suite", r.id},
         {"title", r.title},
         {"passed", r.passed()},
         {"cases", r.cases.size()},
         {"failures", r.failures.size()},
         {"worst_constant", worst},
         {"failed_cases", failures}};
  if (all_cases) j["case_results"] = cases;
  return j;
}

}  // namespace grandnet
