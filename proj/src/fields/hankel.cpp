#include "fbl/fields/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fbl/core/errors.hpp"
#include "fbl/core/parallel.hpp"
#include "fbl/core/quadrature.hpp"
#include "fbl/simd/kernels.hpp"
#include "fbl/specfun/bessel.hpp"
#include "fbl/specfun/bump.hpp"

namespace fbl {

RhoGrid::RhoGrid(double lo_, double hi_, int panels_, int per_panel_)
    : lo(lo_), hi(hi_), panels(panels_), per_panel(per_panel_) {
  if (!(hi > lo) || lo < 0.0 || panels < 1) throw ConfigError("invalid rho grid");
  Rule r = composite_gauss(lo, hi, panels, per_panel);
  nodes = r.x;
  weights = r.w;
}

RhoGrid RhoGrid::for_band(double lo, double hi, double r_max, int per_panel) {
  int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) * r_max / 8.0)));
  return RhoGrid(lo, hi, panels, per_panel);
}

cplx RhoGrid::interpolate(const cplx* values, double rho) const {
  if (rho < lo || rho > hi) return 0.0;
  double width = (hi - lo) / panels;
  int p = std::min(static_cast<int>((rho - lo) / width), panels - 1);
  double t = (rho - (lo + (p + 0.5) * width)) / (0.5 * width);
  const Rule& g = gauss_legendre(per_panel);
  const auto& b = gauss_barycentric(per_panel);
  cplx num = 0.0;
  double den = 0.0;
  for (int i = 0; i < per_panel; ++i) {
    double d = t - g.x[i];
    if (d == 0.0) return values[p * per_panel + i];
    double w = b[i] / d;
    num += w * values[p * per_panel + i];
    den += w;
  }
  return num / den;
}

BandSpectrum::BandSpectrum(RhoGrid rho_, int k_max_)
    : rho(std::move(rho_)), k_max(k_max_), h(static_cast<std::size_t>(2 * k_max_ + 1) * rho.size()) {}

double BandSpectrum::l2_norm() const {
  return std::sqrt(weighted_norm_sq([](double) { return 1.0; }));
}

BandSpectrum hankel_forward(const AngularSpectrumField& f, const RhoGrid& rho) {
  const int K = f.k_max;
  const int n = f.grid.n_r;
  BandSpectrum out(rho, K);
  const auto& kern = simd::active();
  parallel_for(static_cast<std::size_t>(rho.size()), [&](std::size_t i) {
    std::vector<double> y(n), J(static_cast<std::size_t>(K + 1) * n);
    for (int j = 0; j < n; ++j) y[j] = rho.nodes[i] * f.grid.nodes[j];
    bessel_j_range_batch(K, y.data(), n, J.data());
    for (int k = 0; k <= K; ++k) {
      double* row = J.data() + static_cast<std::size_t>(k) * n;
      for (int j = 0; j < n; ++j) row[j] *= f.grid.weights_r[j];
      out.at(k, static_cast<int>(i)) = kern.rdot(row, f.channel(k), n);
      if (k > 0) out.at(-k, static_cast<int>(i)) = kern.rdot(row, f.channel(-k), n);
    }
  });
  return out;
}

AngularSpectrumField hankel_inverse(const BandSpectrum& s, const RadialGrid& grid) {
  const int K = s.k_max;
  const int n = grid.n_r;
  const int chunk = 256;
  AngularSpectrumField out(grid, K);
  const auto& kern = simd::active();
  const int n_chunks = (n + chunk - 1) / chunk;
  parallel_for(static_cast<std::size_t>(n_chunks), [&](std::size_t c) {
    int j0 = static_cast<int>(c) * chunk;
    int m = std::min(chunk, n - j0);
    std::vector<double> y(m), J(static_cast<std::size_t>(K + 1) * m);
    for (int i = 0; i < s.rho.size(); ++i) {
      double rho = s.rho.nodes[i];
      double wr = s.rho.weights[i] * rho;
      for (int j = 0; j < m; ++j) y[j] = rho * grid.nodes[j0 + j];
      bessel_j_range_batch(K, y.data(), m, J.data());
      for (int k = -K; k <= K; ++k) {
        cplx a = wr * s.at(k, i);
        if (a == cplx(0.0, 0.0)) continue;
        kern.axpy(a, J.data() + static_cast<std::size_t>(std::abs(k)) * m, out.channel(k) + j0, m);
      }
    }
  });
  return out;
}

AngularSpectrumField band_limit(const AngularSpectrumField& f, double lo, double hi, const BandLimitOptions& opts) {
  if (!(lo > 0.0) || !(hi > lo)) throw DomainError("band_limit needs 0 < lo < hi");
  double delta = opts.transition < 0.0 ? 0.25 * (hi - lo) : opts.transition;
  double top = hi + delta;
  double spacing = f.grid.r_max / f.grid.n_r;
  double per_wavelength = 2.0 * std::numbers::pi / (top * spacing);
  if (per_wavelength < opts.min_nodes_per_wavelength) {
    throw ResolutionError("radial grid resolves fewer than " + std::to_string(opts.min_nodes_per_wavelength) +
                          " nodes per wavelength at the band edge");
  }
  double bottom = std::max(lo - delta, 0.0);
  // panel breaks at lo and hi keep a sharp cut exact under quadrature
  auto piece = [&](double a, double b) {
    return RhoGrid::for_band(a, b, f.grid.r_max);
  };
  std::vector<RhoGrid> parts;
  if (lo - bottom > 0.0) parts.push_back(piece(bottom, lo));
  parts.push_back(piece(lo, hi));
  if (top - hi > 0.0) parts.push_back(piece(hi, top));
  auto chi = [&](double rho) {
    if (rho < lo) return delta > 0.0 ? smooth_step((rho - (lo - delta)) / delta) : 0.0;
    if (rho > hi) return delta > 0.0 ? smooth_step(((hi + delta) - rho) / delta) : 0.0;
    return 1.0;
  };
  AngularSpectrumField out(f.grid, f.k_max);
  for (const auto& g : parts) {
    BandSpectrum s = hankel_forward(f, g);
    for (int k = -s.k_max; k <= s.k_max; ++k)
      for (int i = 0; i < g.size(); ++i) s.at(k, i) *= chi(g.nodes[i]);
    out += hankel_inverse(s, f.grid);
  }
  return out;
}

SpectralMass spectral_mass_split(const AngularSpectrumField& f, double lo, double hi, double rho_cap) {
  std::vector<RhoGrid> parts;
  if (lo > 0.0) parts.push_back(RhoGrid::for_band(0.0, lo, f.grid.r_max));
  parts.push_back(RhoGrid::for_band(lo, hi, f.grid.r_max));
  if (rho_cap > hi) parts.push_back(RhoGrid::for_band(hi, rho_cap, f.grid.r_max));
  SpectralMass m;
  for (const auto& p : parts) {
    double v = hankel_forward(f, p).weighted_norm_sq([](double) { return 1.0; });
    (p.lo >= lo && p.hi <= hi ? m.inside : m.outside) += v;
  }
  return m;
}

double spectral_mass_outside(const AngularSpectrumField& f, double lo, double hi, double rho_cap) {
  SpectralMass m = spectral_mass_split(f, lo, hi, rho_cap);
  double total = m.inside + m.outside;
  return total > 0.0 ? m.outside / total : 0.0;
}

}  // namespace fbl
