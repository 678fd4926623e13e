//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

// Experiment driver: one subcommand per experiment, flags generated from the
// experiment's parameters, JSON report on stdout or --out, tables to --csv.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include "cat0lab/error.hpp"
#include "cat0lab/experiments.hpp"
#include "cat0lab/io.hpp"
#include "cat0lab/version.hpp"

namespace {

using nlohmann::json;
namespace ex = cat0lab::experiments;

enum ExitCode : int {
  kOk = 0,
  kAssertionFailed = 1,
  kUsage = 2,
  kIo = 3,
  kComputation = 4,
};

std::string flag_name(const std::string& key) {
  std::string out = key;
  for (char& c : out)
    if (c == '_') c = '-';
  return out;
}

// Converts a flag value to the type fixed by the parameter default.
json convert(const ex::Param& p, const std::string& text) {
  const json& d = p.default_value;
  const auto bad = [&]() -> json {
    cat0lab::fail(cat0lab::ErrorKind::kPrecondition, "--" + flag_name(p.key) + ": cannot parse '" + text + "'");
  };
  try {
    std::size_t used = 0;
    if (d.is_string()) return text;
    if (d.is_boolean()) {
      if (text == "true" || text == "1") return true;
      if (text == "false" || text == "0") return false;
      return bad();
    }
    if (d.is_null()) {
      if (!text.empty() && text[0] == '-') return bad();
      const std::uint64_t v = std::stoull(text, &used);
      return used == text.size() ? json(v) : bad();
    }
    if (d.is_number_float()) {
      const double v = std::stod(text, &used);
      return used == text.size() ? json(v) : bad();
    }
    const long long v = std::stoll(text, &used);
    return used == text.size() ? json(v) : bad();
  } catch (const std::logic_error&) {
    return bad();
  }
}

struct Command {
  const ex::Experiment* experiment = nullptr;
  CLI::App* app = nullptr;
  std::map<std::string, std::string> values;
  std::string config_path;
  std::string out_path;
  std::string csv_path;
  bool compact = false;
  bool table = false;
};

int execute(Command& cmd) {
  json config = json::object();
  if (!cmd.config_path.empty()) {
    try {
      config = json::parse(cat0lab::io::read_file(cmd.config_path));
    } catch (const json::exception& e) {
      throw cat0lab::io::IoError(cmd.config_path + ": " + e.what());
    }
    if (config.contains("experiment")) {
      cat0lab::require(config["experiment"] == cmd.experiment->name, "config names a different experiment");
      config.erase("experiment");
    }
    // A full report may be replayed: take its config section.
    if (config.contains("config")) config = config["config"];
  }
  for (const auto& p : cmd.experiment->params) {
    const auto it = cmd.values.find(p.key);
    if (it != cmd.values.end() && cmd.app->count("--" + flag_name(p.key)) > 0) config[p.key] = convert(p, it->second);
  }
  const auto report = ex::run(cmd.experiment->name, config);
  const std::string text = report.document.dump(cmd.compact ? -1 : 2) + "\n";
  if (cmd.table) cat0lab::require(report.csv.has_value(), cmd.experiment->name + " produces no table");
  if (!cmd.out_path.empty()) {
    cat0lab::io::write_file(cmd.out_path, text);
  } else if (!cmd.table) {
    std::cout << text;
  }
  if (cmd.table) std::cout << *report.csv;
  if (!cmd.csv_path.empty()) {
    cat0lab::require(report.csv.has_value(), cmd.experiment->name + " produces no table");
    cat0lab::io::write_file(cmd.csv_path, *report.csv);
  }
  if (!report.pass) std::cerr << cmd.experiment->name << ": check failed\n";
  return report.pass ? kOk : kAssertionFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cat0lab: experiments on CAT(0) fixed-point criteria for random groups"};
  app.set_version_flag("--version", std::string(cat0lab::kVersion));
  app.require_subcommand(1);

  app.add_subcommand("list", "List every experiment with the result it exercises");

  std::vector<Command> commands;
  commands.reserve(ex::catalog().size());
  for (const auto& e : ex::catalog()) {
    Command& cmd = commands.emplace_back();
    cmd.experiment = &e;
    cmd.app = app.add_subcommand(e.name, e.summary);
    for (const auto& p : e.params) {
      std::string help = p.help;
      if (!p.default_value.is_null()) help += " [default: " + p.default_value.dump() + "]";
      cmd.app->add_option("--" + flag_name(p.key), cmd.values[p.key], help);
    }
    cmd.app->add_option("--config", cmd.config_path, "JSON config (or a previous report); flags override it");
    cmd.app->add_option("--out", cmd.out_path, "write the JSON report here instead of stdout");
    cmd.app->add_option("--csv", cmd.csv_path, "write the result table here");
    cmd.app->add_flag("--compact", cmd.compact, "single-line JSON");
    cmd.app->add_flag("--table", cmd.table, "print the result table (CSV) on stdout instead of the report");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (app.got_subcommand("list")) {
    for (const auto& e : ex::catalog()) std::cout << e.name << "\t" << e.anchor << "\n";
    return kOk;
  }
  for (auto& cmd : commands) {
    if (!cmd.app->parsed()) continue;
    try {
      return execute(cmd);
    } catch (const cat0lab::io::IoError& e) {
      std::cerr << "i/o error: " << e.what() << "\n";
      return kIo;
    } catch (const cat0lab::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      switch (e.kind()) {
        case cat0lab::ErrorKind::kPrecondition:
          return kUsage;
        case cat0lab::ErrorKind::kDiscrepancy:
          return kAssertionFailed;
        default:
          return kComputation;
      }
    } catch (const json::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kUsage;
    }
  }
  return kUsage;
}
