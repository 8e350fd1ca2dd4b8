#include "fbl/fields/data.hpp"

#include <cmath>
#include <random>

namespace fbl {

BandDatum::BandDatum(const Options& opts) : opts_(opts) {
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  int K = k_max();
  for (int k = 0; k <= K; ++k) {
    double decay = 1.0 / (1.0 + k);
    cplx a(normal(rng), k == 0 ? 0.0 : normal(rng));
    if (k == 0) a = cplx(1.0 + std::abs(a.real()), 0.0);
    amp_.push_back(a * decay);
    freq_.push_back(0.5 + 1.5 * unif(rng));
    phase_.push_back(6.283185307179586 * unif(rng));
  }
}

cplx BandDatum::eval(int k, double rho) const {
  int ak = std::abs(k);
  if (ak > k_max()) return 0.0;
  double x = rho / lambda_;
  if (x <= opts_.lo || x >= opts_.hi) return 0.0;
  double mid = 0.5 * (opts_.lo + opts_.hi), half = 0.5 * (opts_.hi - opts_.lo);
  double u = (x - mid) / half;
  double bump = std::exp(-opts_.kappa / (1.0 - u * u) + opts_.kappa);
  double mod = 1.0 + 0.3 * std::cos(freq_[ak] * 3.141592653589793 * u + phase_[ak]);
  cplx v = amp_[ak] * (bump * mod * scale_ / (lambda_ * lambda_));
  return k < 0 ? std::conj(v) : v;
}

BandDatum BandDatum::dilated(double lambda) const {
  BandDatum d = *this;
  d.lambda_ *= lambda;
  return d;
}

BandDatum BandDatum::scaled(double c) const {
  BandDatum d = *this;
  d.scale_ *= c;
  return d;
}

BandSpectrum BandDatum::spectrum(const RhoGrid& grid) const {
  BandSpectrum s(grid, k_max());
  for (int k = -k_max(); k <= k_max(); ++k)
    for (int i = 0; i < grid.size(); ++i) s.at(k, i) = eval(k, grid.nodes[i]);
  return s;
}

BandSpectrum BandDatum::spectrum(double r_max) const { return spectrum(RhoGrid::for_band(lo(), hi(), r_max)); }

AngularSpectrumField BandDatum::field(const RadialGrid& grid) const {
  return hankel_inverse(spectrum(grid.r_max), grid);
}

}  // namespace fbl
