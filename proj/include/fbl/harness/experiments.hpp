#pragma once

#include <string>
#include <vector>

#include "fbl/harness/config.hpp"

namespace fbl {

struct Check {
  int criterion = 0;
  std::string name;
  Status status = Status::fail;
  nlohmann::json data = nlohmann::json::object();
};

struct RunReport {
  RunConfig config;
  std::vector<Check> checks;
  std::vector<std::string> files;
  std::string error;  // module error that stopped the experiment
  double wall_seconds = 0.0;
  Status status = Status::pass;
  nlohmann::json to_json() const;
};

// validates the config, runs one experiment, writes its CSVs and report.json
// into config.out_dir; module errors become a failed report
RunReport run(const RunConfig& config);

struct CriterionResult {
  int id = 0;
  std::string title;
  Status status = Status::pass;
  double seconds = 0.0;
  std::vector<std::string> checks;
};

struct SuiteReport {
  Tier tier = Tier::quick;
  std::uint64_t seed = 1;
  std::vector<RunReport> runs;
  std::vector<CriterionResult> criteria;
  double wall_seconds = 0.0;
  Status status = Status::pass;
  nlohmann::json to_json() const;
};

const std::vector<std::string>& criterion_titles();  // index 0 is criterion 1

// every experiment at one tier, one subdirectory each, plus suite.json
SuiteReport suite(Tier tier, std::uint64_t seed, const std::string& out_dir);

}  // namespace fbl
