#include "fbl/propagator/kernel_form.hpp"

#include <cmath>
#include <numbers>

#include "fbl/core/errors.hpp"
#include "fbl/core/parallel.hpp"
#include "fbl/core/quadrature.hpp"
#include "fbl/kernel/psi.hpp"

namespace fbl {

TimeTransform time_transform(const BandSpectrum& spec, const KernelFormOptions& opts) {
  TimeTransform tt;
  int panels = static_cast<int>(std::ceil(2.0 * opts.s_max));
  Rule rule = composite_gauss(-opts.s_max, opts.s_max, panels, opts.nodes_per_unit);
  tt.s = rule.x;
  tt.w = rule.w;
  tt.k_max = spec.k_max;
  const std::size_t ns = tt.s.size();
  const int nr = spec.rho.size();
  tt.values.assign(static_cast<std::size_t>(2 * spec.k_max + 1) * ns, 0.0);
  parallel_for(ns, [&](std::size_t i) {
    std::vector<cplx> e(nr);
    for (int q = 0; q < nr; ++q) e[q] = spec.rho.weights[q] * std::polar(1.0, -tt.s[i] * spec.rho.nodes[q]);
    for (int k = -spec.k_max; k <= spec.k_max; ++k) {
      const cplx* h = spec.channel(k);
      cplx sum = 0.0;
      for (int q = 0; q < nr; ++q) sum += e[q] * h[q];
      tt.values[static_cast<std::size_t>(k + spec.k_max) * ns + i] = sum;
    }
  });
  return tt;
}

namespace {

std::vector<cplx> convolve(const TimeTransform& tt, double t, double r) {
  const int K = tt.k_max;
  const std::size_t ns = tt.s.size();
  std::vector<cplx> acc(2 * K + 1, 0.0), psi(K + 1);
  int n = psi_nodes(K, r);
  for (std::size_t i = 0; i < ns; ++i) {
    psi_all_orders(K, t - tt.s[i], r, psi.data(), n);
    for (int k = -K; k <= K; ++k) acc[k + K] += tt.w[i] * tt.channel(k)[i] * psi[std::abs(k)];
  }
  return acc;
}

}  // namespace

std::vector<cplx> kernel_form_coefficients(const TimeTransform& tt, double t, double r) {
  auto acc = convolve(tt, t, r);
  const int K = tt.k_max;
  const double c = 1.0 / (4.0 * std::numbers::pi * std::numbers::pi);
  for (int k = -K; k <= K; ++k) acc[k + K] *= std::pow(cplx(0.0, -1.0), std::abs(k)) * c;
  return acc;
}

std::vector<double> kernel_form_evaluate(const BandSpectrum& spec, double t, double r,
                                         const KernelFormOptions& opts) {
  auto acc = convolve(time_transform(spec, opts), t, r);
  std::vector<double> terms(acc.size());
  const double c = std::pow(2.0 * std::numbers::pi, -3.0);
  for (std::size_t i = 0; i < acc.size(); ++i) terms[i] = c * std::norm(acc[i]);
  return terms;
}

std::vector<double> kernel_form_evaluate(const AngularSpectrumField& f, double t, double r,
                                         const KernelFormOptions& opts) {
  if (spectral_mass_outside(f, 0.5, 1.0, 2.0) > 1e-8) throw DomainError("kernel form needs data band limited to [1/2, 1]");
  RhoGrid rho = RhoGrid::for_band(0.5, 1.0, std::max(f.grid.r_max, opts.s_max) + std::abs(t));
  return kernel_form_evaluate(hankel_forward(f, rho), t, r, opts);
}

}  // namespace fbl
