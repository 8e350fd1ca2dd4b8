#pragma once

#include <cstdint>
#include <vector>

#include "fbl/fields/hankel.hpp"

namespace fbl {

// Seeded band-limited datum given by its radial spectrum
//   h_k(rho) = lambda^{-2} g_k(rho / lambda),
// g_k a smooth bump on [lo, hi] times a random low-order modulation, with
// h_{-k} = conj(h_k) so the spatial field is real.
class BandDatum {
 public:
  struct Options {
    double lo = 0.5;
    double hi = 1.0;
    int k_max = 8;
    double kappa = 9.0;  // bump sharpness exp(-kappa / (1 - x^2))
    bool radial = false;
    std::uint64_t seed = 1;
  };

  explicit BandDatum(const Options& opts);

  cplx eval(int k, double rho) const;
  BandDatum dilated(double lambda) const;  // spectrum of f(lambda x)
  BandDatum scaled(double c) const;

  double lo() const { return lambda_ * opts_.lo; }
  double hi() const { return lambda_ * opts_.hi; }
  int k_max() const { return opts_.radial ? 0 : opts_.k_max; }
  std::uint64_t seed() const { return opts_.seed; }

  BandSpectrum spectrum(const RhoGrid& grid) const;
  BandSpectrum spectrum(double r_max) const;  // GL grid on [lo, hi] fit for r <= r_max
  AngularSpectrumField field(const RadialGrid& grid) const;

 private:
  Options opts_;
  double lambda_ = 1.0;
  double scale_ = 1.0;
  std::vector<cplx> amp_;      // per k >= 0
  std::vector<double> freq_;   // modulation frequency per k
  std::vector<double> phase_;  // modulation phase per k
};

}  // namespace fbl
