#pragma once

#include <complex>
#include <string>
#include <vector>

#include "fbl/fields/field.hpp"

namespace fbl {

// n x n samples at x_i = (i - n/2) h, row-major with x as the slow index.
struct CartesianGrid {
  int n = 1024;
  double h = 0.5;
  double x(int i) const { return (i - n / 2) * h; }
  double extent() const { return n * h; }
  // angular frequency of FFT bin i
  double xi(int i) const;
};

struct CartesianField {
  CartesianField() = default;
  explicit CartesianField(CartesianGrid g) : grid(g), v(static_cast<std::size_t>(g.n) * g.n) {}
  CartesianGrid grid;
  std::vector<cplx> v;
  cplx& at(int i, int j) { return v[static_cast<std::size_t>(i) * grid.n + j]; }
  cplx at(int i, int j) const { return v[static_cast<std::size_t>(i) * grid.n + j]; }
  double l2_norm() const;
  double max_abs() const;
  // max |f| on the outermost `width` rows and columns relative to max |f|
  double boundary_ratio(int width = 2) const;
};

CartesianField synthesize(const AngularSpectrumField& f, const CartesianGrid& g);

struct AnalyzeOptions {
  int order = 8;      // tensor Lagrange order for polar resampling
  int upsample = 1;   // spectral refinement factor applied before resampling
  int n_theta = 0;    // angular samples; 0 picks a size >= 2 (2 k_max + 1)
};

struct AnalyzeDiagnostics {
  double boundary_ratio = 0.0;
  bool truncation_warning = false;
};

// polar resampling followed by an angular FFT per radius; throws DomainError on
// NaN input
AngularSpectrumField analyze(const CartesianField& f, const RadialGrid& grid, int k_max,
                             const AnalyzeOptions& opts = {}, AnalyzeDiagnostics* diag = nullptr);

// spectral refinement by zero padding the 2-D spectrum (factor must be >= 1)
CartesianField upsample(const CartesianField& f, int factor);

// unnormalized forward FFT of the samples with the centering phase removed,
// so that h^2 * result approximates the continuous transform at grid.xi()
std::vector<cplx> cartesian_spectrum(const CartesianField& f);
CartesianField from_cartesian_spectrum(std::vector<cplx> spec, const CartesianGrid& g);

}  // namespace fbl
