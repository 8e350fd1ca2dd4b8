#pragma once

#include <vector>

#include "fbl/fields/field.hpp"

namespace fbl {

// Composite Gauss-Legendre nodes on [lo, hi] in radial frequency.
struct RhoGrid {
  RhoGrid() = default;
  RhoGrid(double lo, double hi, int panels, int per_panel = 16);
  // enough panels to resolve J_k(rho r) for r <= r_max
  static RhoGrid for_band(double lo, double hi, double r_max, int per_panel = 16);

  double lo = 0.0, hi = 0.0;
  int panels = 0, per_panel = 16;
  std::vector<double> nodes, weights;

  int size() const { return static_cast<int>(nodes.size()); }
  cplx interpolate(const cplx* values, double rho) const;
};

// h_k(rho) = int a_k(r) J_|k|(rho r) r dr on a RhoGrid; inverse
// a_k(r) = int h_k(rho) J_|k|(rho r) rho d rho. With this pair
// |f|_2^2 = 2pi sum_k int |h_k|^2 rho d rho.
struct BandSpectrum {
  BandSpectrum() = default;
  BandSpectrum(RhoGrid rho, int k_max);

  RhoGrid rho;
  int k_max = 0;
  std::vector<cplx> h;  // (k + k_max) * n_rho + i

  cplx* channel(int k) { return h.data() + static_cast<std::size_t>(k + k_max) * rho.size(); }
  const cplx* channel(int k) const { return h.data() + static_cast<std::size_t>(k + k_max) * rho.size(); }
  cplx& at(int k, int i) { return channel(k)[i]; }
  cplx at(int k, int i) const { return channel(k)[i]; }

  // weighted norm 2pi sum_k (1+k^2)^b int |h_k|^2 w(rho) rho d rho
  template <class W>
  double weighted_norm_sq(W&& w, double b = 0.0) const;
  double l2_norm() const;
};

BandSpectrum hankel_forward(const AngularSpectrumField& f, const RhoGrid& rho);
AngularSpectrumField hankel_inverse(const BandSpectrum& s, const RadialGrid& grid);

struct BandLimitOptions {
  double transition = -1.0;  // smoothing width; negative picks (hi - lo) / 4, 0 is a sharp cut
  int min_nodes_per_wavelength = 8;
};

// radial-frequency projection of every angular channel onto [lo, hi] with a
// smoothed indicator
AngularSpectrumField band_limit(const AngularSpectrumField& f, double lo, double hi,
                                const BandLimitOptions& opts = {});

struct SpectralMass {
  double inside = 0.0;   // squared L2 mass with rho in [lo, hi]
  double outside = 0.0;  // squared L2 mass with rho in [0, lo) or (hi, rho_cap]
};

SpectralMass spectral_mass_split(const AngularSpectrumField& f, double lo, double hi, double rho_cap);

// fraction of spectral mass of f outside [lo, hi], measured on a grid over
// [0, rho_cap]
double spectral_mass_outside(const AngularSpectrumField& f, double lo, double hi, double rho_cap);

template <class W>
double BandSpectrum::weighted_norm_sq(W&& w, double b) const {
  double s = 0.0;
  for (int k = -k_max; k <= k_max; ++k) {
    double ck = 0.0;
    const cplx* c = channel(k);
    for (int i = 0; i < rho.size(); ++i) ck += rho.weights[i] * rho.nodes[i] * w(rho.nodes[i]) * std::norm(c[i]);
    s += ck * (b == 0.0 ? 1.0 : std::pow(1.0 + double(k) * k, b));
  }
  return 2.0 * 3.14159265358979323846 * s;
}

}  // namespace fbl
