//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAT0LAB_EXPERIMENTS_HPP_
#define CAT0LAB_EXPERIMENTS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cat0lab::experiments {

using nlohmann::json;

/// One configuration key. The default fixes the type; a null default marks
/// an unsigned seed that must be supplied.
struct Param {
  std::string key;
  json default_value;
  std::string help;
};

struct Outcome {
  json result = json::object();
  bool pass = true;
  std::optional<std::string> csv;  // table with a header row
};

struct Experiment {
  std::string name;
  std::string anchor;   // the result of the theory the experiment exercises
  std::string summary;
  std::vector<Param> params;
  std::function<Outcome(const json& config)> run;
};

const std::vector<Experiment>& catalog();
/// Throws a precondition error for unknown names.
const Experiment& find(const std::string& name);

/// Fills defaults and checks keys and types; unknown keys, wrong types and
/// missing seeds raise precondition errors.
json complete_config(const Experiment& e, const json& config);

struct Report {
  json document;  // tool, version, experiment, anchor, config, result, pass
  bool pass = true;
  std::optional<std::string> csv;
};

/// Deterministic in the config: no timestamps, object keys sorted.
Report run(const std::string& name, const json& config);

}  // namespace cat0lab::experiments

#endif  // CAT0LAB_EXPERIMENTS_HPP_
