#include "fbl/fields/sobolev.hpp"

#include <cmath>

#include "fbl/core/errors.hpp"

namespace fbl {

CartesianGrid default_cartesian_grid(const RadialGrid& grid, int n) { return {n, 2.0 * grid.r_max / n}; }

double sobolev_norm(const CartesianField& f, double s, bool homogeneous) {
  const int n = f.grid.n;
  std::vector<cplx> spec = cartesian_spectrum(f);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    double xi1 = f.grid.xi(i);
    for (int j = 0; j < n; ++j) {
      double xi2 = f.grid.xi(j);
      double q = xi1 * xi1 + xi2 * xi2;
      double a2 = std::norm(spec[static_cast<std::size_t>(i) * n + j]);
      double w;
      if (homogeneous) {
        if (q == 0.0) {
          if (s < 0.0 && a2 > 1e-24 * (1.0 + sum)) throw DivergenceError("homogeneous norm of negative order diverges at zero frequency");
          w = s == 0.0 ? 1.0 : 0.0;
        } else {
          w = std::pow(q, s);
        }
      } else {
        w = s == 0.0 ? 1.0 : std::pow(1.0 + q, s);
      }
      sum += w * a2;
    }
  }
  double h = f.grid.h;
  return std::sqrt(sum * h * h / (static_cast<double>(n) * n));
}

AngularSpectrumField angular_weight(const AngularSpectrumField& f, double b) {
  AngularSpectrumField g = f;
  if (b == 0.0) return g;
  for (int k = -f.k_max; k <= f.k_max; ++k) {
    double w = std::pow(1.0 + double(k) * k, 0.5 * b);
    cplx* c = g.channel(k);
    for (int j = 0; j < f.grid.n_r; ++j) c[j] *= w;
  }
  return g;
}

double sobolev_norm(const AngularSpectrumField& f, const SobolevSpec& spec, const CartesianGrid& g) {
  if (spec.b < 0.0) throw DomainError("angular order must be nonnegative");
  CartesianField c = synthesize(angular_weight(f, spec.b), g);
  return sobolev_norm(c, spec.s, spec.homogeneous);
}

double sobolev_norm(const AngularSpectrumField& f, const SobolevSpec& spec) {
  return sobolev_norm(f, spec, default_cartesian_grid(f.grid));
}

double sobolev_norm(const BandSpectrum& f, const SobolevSpec& spec) {
  if (spec.homogeneous && spec.s < 0.0 && f.rho.lo == 0.0) {
    throw DivergenceError("homogeneous norm of negative order needs the spectrum away from zero");
  }
  double s = spec.s;
  bool hom = spec.homogeneous;
  return std::sqrt(f.weighted_norm_sq(
      [s, hom](double rho) { return hom ? std::pow(rho, 2.0 * s) : std::pow(1.0 + rho * rho, s); }, spec.b));
}

}  // namespace fbl
