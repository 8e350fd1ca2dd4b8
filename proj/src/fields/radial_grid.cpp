#include "fbl/fields/radial_grid.hpp"

#include <cmath>

#include "fbl/core/errors.hpp"
#include "fbl/core/quadrature.hpp"

namespace fbl {

RadialGrid::RadialGrid(double r_max_, int n_r_, int per_panel_)
    : r_max(r_max_), n_r(n_r_), per_panel(per_panel_) {
  if (r_max <= 0.0 || n_r <= 0 || per_panel <= 1 || n_r % per_panel != 0) {
    throw ConfigError("radial grid needs r_max > 0 and n_r a multiple of the panel order");
  }
  Rule r = composite_gauss(0.0, r_max, n_r / per_panel, per_panel);
  nodes = r.x;
  weights = r.w;
  weights_r.resize(n_r);
  for (int j = 0; j < n_r; ++j) weights_r[j] = weights[j] * nodes[j];
}

bool RadialGrid::stencil(double r, int& panel, double* w) const {
  if (r < 0.0 || r > r_max) return false;
  double width = panel_width();
  panel = std::min(static_cast<int>(r / width), panels() - 1);
  double c = (panel + 0.5) * width;
  double t = (r - c) / (0.5 * width);
  const Rule& g = gauss_legendre(per_panel);
  const auto& b = gauss_barycentric(per_panel);
  double denom = 0.0;
  for (int i = 0; i < per_panel; ++i) {
    double d = t - g.x[i];
    if (d == 0.0) {
      for (int q = 0; q < per_panel; ++q) w[q] = q == i ? 1.0 : 0.0;
      return true;
    }
    w[i] = b[i] / d;
    denom += w[i];
  }
  for (int i = 0; i < per_panel; ++i) w[i] /= denom;
  return true;
}

std::complex<double> RadialGrid::interpolate(const std::complex<double>* values, double r) const {
  double w[64];
  int panel;
  if (!stencil(r, panel, w)) return {0.0, 0.0};
  std::complex<double> s = 0.0;
  const auto* v = values + panel * per_panel;
  for (int i = 0; i < per_panel; ++i) s += w[i] * v[i];
  return s;
}

}  // namespace fbl
