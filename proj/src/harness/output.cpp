#include "fbl/harness/output.hpp"

#include <cmath>
#include <fstream>

#include "fbl/core/errors.hpp"

namespace fbl {

std::string format_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (std::isnan(*d)) return "nan";
    if (std::isinf(*d)) return *d > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", *d);
    return buf;
  }
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

CsvWriter::CsvWriter(const std::string& path, const std::string& schema, const std::vector<std::string>& columns)
    : path_(path), width_(columns.size()) {
  f_ = std::fopen(path.c_str(), "w");
  if (!f_) throw Error("cannot write " + path);
  std::fprintf(f_, "# schema: fblab.%s/%d\n", schema.c_str(), kSchemaVersion);
  for (std::size_t i = 0; i < columns.size(); ++i) std::fprintf(f_, "%s%s", i ? "," : "", columns[i].c_str());
  std::fputc('\n', f_);
}

CsvWriter::~CsvWriter() {
  if (f_) std::fclose(f_);
}

void CsvWriter::row(const std::vector<Cell>& cells) {
  if (cells.size() != width_) throw Error("row width differs from the header in " + path_);
  for (std::size_t i = 0; i < cells.size(); ++i) std::fprintf(f_, "%s%s", i ? "," : "", format_cell(cells[i]).c_str());
  std::fputc('\n', f_);
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << '\n';
}

nlohmann::json num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

}  // namespace fbl
