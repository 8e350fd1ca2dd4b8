#pragma once

#include <string>

#include "fbl/fields/field.hpp"

namespace fbl {

// Binary snapshot: magic "FBLSNAP1", int32 n_r, int32 k_max, int32 per_panel,
// float64 r_max, then (2 k_max + 1) * n_r complex values as little-endian
// float64 pairs, channel-major.
void write_snapshot(const AngularSpectrumField& f, const std::string& path);
AngularSpectrumField read_snapshot(const std::string& path);

// CSV with columns k, r, re, im
void write_field_csv(const AngularSpectrumField& f, const std::string& path);

}  // namespace fbl
