#include "fbl/fields/io.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "fbl/core/errors.hpp"

namespace fbl {

namespace {

constexpr char kMagic[8] = {'F', 'B', 'L', 'S', 'N', 'A', 'P', '1'};

template <class T>
void put(std::ofstream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::ifstream& in) {
  T v;
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw ConfigError("truncated snapshot");
  return v;
}

}  // namespace

void write_snapshot(const AngularSpectrumField& f, const std::string& path) {
  static_assert(std::endian::native == std::endian::little, "snapshot writer assumes a little-endian host");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open " + path);
  out.write(kMagic, 8);
  put<std::int32_t>(out, f.grid.n_r);
  put<std::int32_t>(out, f.k_max);
  put<std::int32_t>(out, f.grid.per_panel);
  put<double>(out, f.grid.r_max);
  out.write(reinterpret_cast<const char*>(f.coeffs.data()), static_cast<std::streamsize>(f.coeffs.size() * sizeof(cplx)));
}

AngularSpectrumField read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, kMagic, 8) != 0) throw ConfigError("not a field snapshot: " + path);
  int n_r = get<std::int32_t>(in);
  int k_max = get<std::int32_t>(in);
  int per_panel = get<std::int32_t>(in);
  double r_max = get<double>(in);
  AngularSpectrumField f(RadialGrid(r_max, n_r, per_panel), k_max);
  in.read(reinterpret_cast<char*>(f.coeffs.data()), static_cast<std::streamsize>(f.coeffs.size() * sizeof(cplx)));
  if (!in) throw ConfigError("truncated snapshot payload");
  return f;
}

void write_field_csv(const AngularSpectrumField& f, const std::string& path) {
  std::FILE* fp = std::fopen(path.c_str(), "w");
  if (!fp) throw ConfigError("cannot open " + path);
  std::fprintf(fp, "# schema=fbl.field.v1\nk,r,re,im\n");
  for (int k = -f.k_max; k <= f.k_max; ++k)
    for (int j = 0; j < f.grid.n_r; ++j)
      std::fprintf(fp, "%d,%.17g,%.17g,%.17g\n", k, f.grid.nodes[j], f.at(k, j).real(), f.at(k, j).imag());
  std::fclose(fp);
}

}  // namespace fbl
