#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <string>
#include <vector>

#include "fbl/harness/config.hpp"
#include "fbl/harness/experiments.hpp"

namespace fs = std::filesystem;
using namespace fbl;

namespace {

// runtime limits per criterion at the standard tier
const std::map<int, double> kLimits = {{1, 60},    {2, 60},    {3, 1800}, {4, 1800}, {5, 60},  {6, 1200},
                                       {7, 1800},  {8, 1800},  {9, 600},  {10, 600}, {11, 3600}};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::map<std::string, std::string> csv_files(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(root))
    if (e.is_regular_file() && e.path().extension() == ".csv")
      out[fs::relative(e.path(), root).string()] = slurp(e.path());
  return out;
}

void line(bool ok, int id, const std::string& title, const std::string& detail) {
  std::printf("%s %2d %s (%s)\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  fs::path root = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "fblab-acceptance";
  fs::remove_all(root);
  int passed = 0;

  SuiteReport std_run = suite(Tier::standard, 1, (root / "standard").string());
  for (const auto& c : std_run.criteria) {
    bool in_time = c.seconds <= kLimits.at(c.id);
    bool ok = c.status == Status::pass && in_time;
    std::string detail = std::string(status_name(c.status)) + ", " + std::to_string(c.seconds) + " s";
    if (!in_time) detail += " over limit";
    for (const auto& s : c.checks)
      if (s.find(": pass") == std::string::npos) detail += "; " + s;
    line(ok, c.id, c.title, detail);
    passed += ok;
  }

  SuiteReport a = suite(Tier::quick, 1, (root / "quick-a").string());
  SuiteReport b = suite(Tier::quick, 1, (root / "quick-b").string());
  auto fa = csv_files(root / "quick-a"), fb = csv_files(root / "quick-b");
  std::string diff;
  for (const auto& [name, body] : fa) {
    auto it = fb.find(name);
    if (it == fb.end() || it->second != body) diff += " " + name;
  }
  if (fa.size() != fb.size()) diff += " file set differs";
  bool ok12 = diff.empty() && !fa.empty() && a.wall_seconds <= 600.0;
  std::string d12 = std::to_string(fa.size()) + " csv files, quick tier " + std::to_string(a.wall_seconds) + " s";
  if (!diff.empty()) d12 += ", mismatch:" + diff;
  line(ok12, 12, "quick tier determinism", d12);
  passed += ok12;

  std::printf("%d of 12 criteria passed\n", passed);
  return 0;
}
