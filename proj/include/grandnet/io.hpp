#pragma once

#include <string>

#include <json.hpp>

#include "grandnet/grid.hpp"
#include "grandnet/interp.hpp"
#include "grandnet/norms.hpp"
#include "grandnet/opkernel.hpp"
#include "grandnet/verify.hpp"

namespace grandnet {

using json = nlohmann::ordered_json;

/// {"n": int, "values": [real, ...]}; `n` is optional but must match when given.
GridFunction grid_function_from_json(const json& j);
json to_json(const GridFunction& f);

/// {"nx": int, "ny": int, "values": [[real, ...], ...]}, row i = x-cell i.
Kernel kernel_from_json(const json& j);
json to_json(const Kernel& k);

/// Parses a file, prefixing errors with the path (and line/column for syntax errors).
json read_json_file(const std::string& path);

/// Writes `content` to `path` through a sibling temporary file and a rename.
void write_file_atomic(const std::string& path, const std::string& content);

/// Doubles that may be infinite: +inf is written as the string "inf".
json number_or_inf(double v);
double number_from_json(const json& j, const std::string& field);

json to_json(const NormResult& r);
json to_json(const SpaceParams& p);
json to_json(const EpsilonSearch& s);
json to_json(const EmbeddingReport& r);

json to_json(const CaseSpec& c);
CaseSpec case_spec_from_json(const json& j);
json to_json(const CaseResult& r);
/// Summary plus replayable failures; `all_cases` also lists every case result.
json to_json(const SuiteReport& r, bool all_cases);

}  // namespace grandnet
