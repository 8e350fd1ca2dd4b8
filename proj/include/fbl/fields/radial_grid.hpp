#pragma once

#include <complex>
#include <vector>

namespace fbl {

// Composite Gauss-Legendre nodes on (0, r_max]: n_r / per_panel equal panels.
struct RadialGrid {
  RadialGrid() : RadialGrid(256.0, 2048) {}
  RadialGrid(double r_max, int n_r, int per_panel = 16);

  double r_max;
  int n_r;
  int per_panel;
  std::vector<double> nodes;
  std::vector<double> weights;     // for int ... dr
  std::vector<double> weights_r;   // for int ... r dr

  int panels() const { return n_r / per_panel; }
  double panel_width() const { return r_max / panels(); }

  // spectral interpolation of nodal values at radius r (0 beyond r_max)
  std::complex<double> interpolate(const std::complex<double>* values, double r) const;
  // panel index and barycentric weights for radius r; returns false beyond r_max
  bool stencil(double r, int& panel, double* w) const;

  bool operator==(const RadialGrid& o) const {
    return r_max == o.r_max && n_r == o.n_r && per_panel == o.per_panel;
  }
};

}  // namespace fbl
