#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace fbl {

enum class Tier { quick, standard, thorough };
const char* tier_name(Tier t);
Tier parse_tier(const std::string& name);

enum class Status { pass, fail, inconclusive };
const char* status_name(Status s);
int exit_code(Status s);
Status combine(Status a, Status b);

constexpr int kUsageExit = 64;

const std::vector<std::string>& experiment_names();

struct RunConfig {
  std::string experiment;
  std::uint64_t seed = 1;
  Tier tier = Tier::quick;
  std::string out_dir = "fblab-out";
  nlohmann::json params = nlohmann::json::object();

  // throws ConfigError naming the offending key
  void validate() const;
  nlohmann::json to_json() const;
  static RunConfig from_json(const nlohmann::json& j);
  static RunConfig load(const std::string& path);

  double num(const std::string& key, double fallback) const;
  std::vector<double> list(const std::string& key, const std::vector<double>& fallback) const;
  std::string str(const std::string& key, const std::string& fallback) const;
};

// tier-dependent default: quick, standard, thorough
template <class T>
T by_tier(Tier t, T quick, T standard, T thorough) {
  return t == Tier::quick ? quick : (t == Tier::standard ? standard : thorough);
}

}  // namespace fbl
