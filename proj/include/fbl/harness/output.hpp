#pragma once

#include <cstdio>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace fbl {

constexpr const char* kToolVersion = "0.1.0";
constexpr int kSchemaVersion = 1;

using Cell = std::variant<double, long long, std::string>;

// doubles print with %.17g so files round-trip exactly
std::string format_cell(const Cell& c);

// first line "# schema: fblab.<name>/<version>", then the column header
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::string& schema, const std::vector<std::string>& columns);
  ~CsvWriter();
  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  void row(const std::vector<Cell>& cells);
  const std::string& path() const { return path_; }

 private:
  std::FILE* f_ = nullptr;
  std::string path_;
  std::size_t width_ = 0;
};

void write_json(const std::string& path, const nlohmann::json& j);

// JSON numbers cannot hold inf or nan
nlohmann::json num(double x);

}  // namespace fbl
