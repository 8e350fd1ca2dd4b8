#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fbl/core/errors.hpp"
#include "fbl/harness/experiments.hpp"

using namespace fbl;

namespace {

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("eps-list: '" + item + "' is not a number");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier-Bessel half-wave laboratory"};
  app.require_subcommand(0, 1);

  std::string experiment, config_path, tier, out;
  std::uint64_t seed = 0;
  double q = 0, r = 0, gamma = 0, t_max = 0, horizon = 0;
  int p = 0;
  std::string eps_list, route, dump;

  app.add_option("experiment", experiment, "experiment name or 'suite'");
  app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
  app.add_option("--seed", seed, "random seed");
  app.add_option("--tier", tier, "quick, standard or thorough");
  app.add_option("--out", out, "output directory");
  app.add_option("--q", q, "time exponent");
  app.add_option("--r", r, "space exponent (0 for infinity)");
  app.add_option("--gamma", gamma, "Sobolev order of the endpoint estimate");
  app.add_option("--T-max", t_max, "largest time window");
  app.add_option("--p", p, "nonlinearity degree");
  app.add_option("--eps-list", eps_list, "comma separated data sizes");
  app.add_option("--horizon", horizon, "integration horizon");
  app.add_option("--route", route, "propagator route compared with fourier_bessel");
  app.add_option("--dump-hat-alpha", dump, "write the hat alpha table as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageExit;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) cfg = RunConfig::load(config_path);
    if (!experiment.empty()) cfg.experiment = experiment;
    if (app.count("--seed")) cfg.seed = seed;
    if (!tier.empty()) cfg.tier = parse_tier(tier);
    if (!out.empty()) cfg.out_dir = out;
    if (cfg.experiment.empty() && !dump.empty()) cfg.experiment = "kernel-verify";

    if (cfg.experiment == "suite") {
      auto s = suite(cfg.tier, cfg.seed, cfg.out_dir);
      for (const auto& c : s.criteria) std::printf("%-13s %2d %s\n", status_name(c.status), c.id, c.title.c_str());
      std::printf("suite %s in %.1f s\n", status_name(s.status), s.wall_seconds);
      return exit_code(s.status);
    }

    auto& P = cfg.params;
    if (app.count("--q")) P["q"] = q;
    if (app.count("--r")) {
      if (r == 0) P["r"] = "inf";
      else P["r"] = r;
    }
    if (app.count("--gamma")) P["gamma"] = gamma;
    if (app.count("--T-max")) P["T_max"] = t_max;
    if (app.count("--p")) P["p"] = p;
    if (!eps_list.empty()) P["eps"] = parse_list(eps_list);
    if (app.count("--horizon")) P["horizon"] = horizon;
    if (!route.empty()) P["route"] = route;
    if (!dump.empty()) P["dump_hat_alpha"] = dump;

    auto rep = run(cfg);
    for (const auto& c : rep.checks) std::printf("%-13s %s\n", status_name(c.status), c.name.c_str());
    if (!rep.error.empty()) std::fprintf(stderr, "error: %s\n", rep.error.c_str());
    std::printf("%s %s in %.1f s, output in %s\n", cfg.experiment.c_str(), status_name(rep.status), rep.wall_seconds,
                cfg.out_dir.c_str());
    return exit_code(rep.status);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kUsageExit;
  }
}
