#include "fbl/harness/config.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <set>

#include "fbl/core/errors.hpp"

namespace fbl {

const char* tier_name(Tier t) {
  switch (t) {
    case Tier::quick: return "quick";
    case Tier::standard: return "standard";
    case Tier::thorough: return "thorough";
  }
  return "?";
}

Tier parse_tier(const std::string& name) {
  if (name == "quick") return Tier::quick;
  if (name == "standard") return Tier::standard;
  if (name == "thorough") return Tier::thorough;
  throw ConfigError("tier: unknown value '" + name + "'");
}

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

int exit_code(Status s) {
  switch (s) {
    case Status::pass: return 0;
    case Status::fail: return 1;
    case Status::inconclusive: return 2;
  }
  return 1;
}

Status combine(Status a, Status b) {
  if (a == Status::fail || b == Status::fail) return Status::fail;
  if (a == Status::inconclusive || b == Status::inconclusive) return Status::inconclusive;
  return Status::pass;
}

namespace {

const std::map<std::string, std::set<std::string>>& known_params() {
  static const std::map<std::string, std::set<std::string>> m = {
      {"kernel-verify",
       {"k_max", "j_lo", "j_hi", "bessel_k_max", "bessel_y_max", "bessel_y_step", "symmetry_samples",
        "dump_hat_alpha"}},
      {"keystep", {"k_max", "j_lo", "j_hi"}},
      {"strichartz-endpoint", {"data", "gamma", "T_max", "k_max"}},
      {"strichartz-q", {"q", "T_max", "lambdas", "k_max"}},
      {"generalized", {"q", "r", "T_max", "k_max"}},
      {"dyadic-sum", {"deltas"}},
      {"interp", {"fields", "deltas", "n", "h"}},
      {"convolution", {"fields", "sigma", "lambdas"}},
      {"leibniz", {"pairs", "s", "b"}},
      {"lifespan", {"p", "eps", "horizon", "coef", "grid_n", "length", "width"}},
      {"propagator-crosscheck", {"data", "t_max", "route", "probes", "k_max"}},
  };
  return m;
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> v = {"kernel-verify", "keystep",     "dyadic-sum", "propagator-crosscheck",
                                             "strichartz-endpoint", "strichartz-q", "generalized", "interp",
                                             "convolution",   "leibniz",     "lifespan"};
  return v;
}

void RunConfig::validate() const {
  if (experiment.empty()) throw ConfigError("experiment: missing");
  const auto& m = known_params();
  auto it = m.find(experiment);
  if (it == m.end()) throw ConfigError("experiment: unknown value '" + experiment + "'");
  if (!params.is_object()) throw ConfigError("params: expected an object");
  for (const auto& [k, v] : params.items()) {
    if (!it->second.count(k)) throw ConfigError("params." + k + ": not a parameter of " + experiment);
    if (v.is_null()) throw ConfigError("params." + k + ": null value");
  }
}

nlohmann::json RunConfig::to_json() const {
  return {{"experiment", experiment}, {"seed", seed}, {"tier", tier_name(tier)}, {"out", out_dir}, {"params", params}};
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config: expected an object");
  RunConfig c;
  for (const auto& [k, v] : j.items()) {
    try {
      if (k == "experiment") c.experiment = v.get<std::string>();
      else if (k == "seed") c.seed = v.get<std::uint64_t>();
      else if (k == "tier") c.tier = parse_tier(v.get<std::string>());
      else if (k == "out") c.out_dir = v.get<std::string>();
      else if (k == "params") c.params = v;
      else throw ConfigError(k + ": unknown key");
    } catch (const nlohmann::json::exception&) {
      throw ConfigError(k + ": wrong type");
    }
  }
  return c;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in, nullptr, true, true);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return from_json(j);
}

double RunConfig::num(const std::string& key, double fallback) const {
  if (!params.contains(key)) return fallback;
  const auto& v = params.at(key);
  if (v.is_string() && (v == "inf" || v == "infinity")) return std::numeric_limits<double>::infinity();
  if (!v.is_number()) throw ConfigError("params." + key + ": expected a number");
  return v.get<double>();
}

std::vector<double> RunConfig::list(const std::string& key, const std::vector<double>& fallback) const {
  if (!params.contains(key)) return fallback;
  const auto& v = params.at(key);
  if (v.is_number()) return {v.get<double>()};
  if (!v.is_array()) throw ConfigError("params." + key + ": expected a list of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw ConfigError("params." + key + ": expected a list of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

std::string RunConfig::str(const std::string& key, const std::string& fallback) const {
  if (!params.contains(key)) return fallback;
  const auto& v = params.at(key);
  if (!v.is_string()) throw ConfigError("params." + key + ": expected a string");
  return v.get<std::string>();
}

}  // namespace fbl
