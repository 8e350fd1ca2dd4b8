#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <limits>

#include "doctest.h"
#include "fbl/core/errors.hpp"
#include "fbl/harness/config.hpp"
#include "fbl/harness/experiments.hpp"
#include "fbl/harness/output.hpp"

using namespace fbl;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("fblab-unit-" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("tier and status names") {
  CHECK(parse_tier("standard") == Tier::standard);
  CHECK_THROWS_AS(parse_tier("fast"), ConfigError);
  CHECK(exit_code(Status::pass) == 0);
  CHECK(exit_code(Status::fail) == 1);
  CHECK(exit_code(Status::inconclusive) == 2);
  CHECK(combine(Status::pass, Status::inconclusive) == Status::inconclusive);
  CHECK(combine(Status::inconclusive, Status::fail) == Status::fail);
  CHECK(experiment_names().size() == 11);
}

TEST_CASE("config validation names the key") {
  RunConfig c;
  c.experiment = "strichartz-q";
  c.params = {{"T_max", 64}};
  CHECK_NOTHROW(c.validate());
  c.params["bogus"] = 1;
  try {
    c.validate();
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("bogus") != std::string::npos);
  }
  c.experiment = "nope";
  CHECK_THROWS_AS(c.validate(), ConfigError);
  CHECK_THROWS_AS(RunConfig::from_json({{"seed", "x"}}), ConfigError);
  CHECK_THROWS_AS(RunConfig::from_json({{"colour", 1}}), ConfigError);
}

TEST_CASE("config json round trip") {
  RunConfig c;
  c.experiment = "generalized";
  c.seed = 42;
  c.tier = Tier::thorough;
  c.params = {{"r", "inf"}, {"q", 4}};
  RunConfig d = RunConfig::from_json(c.to_json());
  CHECK(d.experiment == c.experiment);
  CHECK(d.seed == 42);
  CHECK(d.tier == Tier::thorough);
  CHECK(std::isinf(d.num("r", 0.0)));
  CHECK(d.num("q", 0.0) == 4.0);
  CHECK(d.num("missing", 7.0) == 7.0);
}

TEST_CASE("csv cells round trip") {
  double x = 0.1 + 0.2;
  CHECK(std::stod(format_cell(x)) == x);
  CHECK(format_cell(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_cell(3LL) == "3");
  fs::path dir = scratch("csv");
  fs::create_directories(dir);
  {
    CsvWriter w((dir / "a.csv").string(), "demo", {"a", "b"});
    w.row({1.5, 2LL});
  }
  CHECK(slurp(dir / "a.csv") == "# schema: fblab.demo/1\na,b\n1.5,2\n");
}

TEST_CASE("runs are reproducible") {
  fs::path a = scratch("run-a"), b = scratch("run-b");
  for (const char* name : {"dyadic-sum", "leibniz"}) {
    RunConfig c;
    c.experiment = name;
    c.seed = 5;
    c.out_dir = (a / name).string();
    RunReport ra = run(c);
    c.out_dir = (b / name).string();
    RunReport rb = run(c);
    CHECK(ra.error.empty());
    CHECK(ra.status == rb.status);
    REQUIRE(!ra.files.empty());
    for (const auto& f : ra.files) CHECK(slurp(a / name / f) == slurp(b / name / f));
    CHECK(fs::exists(a / name / "report.json"));
  }
}
