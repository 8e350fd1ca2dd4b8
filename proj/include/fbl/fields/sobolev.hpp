#pragma once

#include "fbl/fields/cartesian.hpp"
#include "fbl/fields/hankel.hpp"

namespace fbl {

struct SobolevSpec {
  double s = 0.0;
  double b = 0.0;
  bool homogeneous = false;
};

// H^s (or homogeneous) norm of Cartesian samples through the FFT multiplier
// (1+|xi|^2)^{s/2} or |xi|^s
double sobolev_norm(const CartesianField& f, double s, bool homogeneous = false);

// H^{s,b}_theta norm: (1+k^2)^{b/2} per angular channel, synthesis on the
// Cartesian grid, then the spatial multiplier
double sobolev_norm(const AngularSpectrumField& f, const SobolevSpec& spec, const CartesianGrid& g);
double sobolev_norm(const AngularSpectrumField& f, const SobolevSpec& spec);

// the same norm evaluated directly on the radial spectrum; exact for
// band-limited data
double sobolev_norm(const BandSpectrum& f, const SobolevSpec& spec);

// default Cartesian grid for a field: 1024^2 points spanning [-r_max, r_max)
CartesianGrid default_cartesian_grid(const RadialGrid& grid, int n = 1024);

// multiply channel k by (1+k^2)^{b/2}
AngularSpectrumField angular_weight(const AngularSpectrumField& f, double b);

}  // namespace fbl
