#include "fbl/specfun/bump.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fbl/core/fft.hpp"
#include "fbl/core/quadrature.hpp"
#include "fbl/simd/kernels.hpp"

namespace fbl {

namespace {

double g(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

}  // namespace

double smooth_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double a = g(x), b = g(1.0 - x);
  return a / (a + b);
}

double bump_beta(double tau) {
  if (tau <= 0.25 || tau >= 2.0) return 0.0;
  if (tau < 0.5) return smooth_step((tau - 0.25) / 0.25);
  if (tau <= 1.0) return 1.0;
  return smooth_step(2.0 - tau);
}

double symbol_alpha(double rho) { return rho * bump_beta(rho); }

std::complex<double> hat_alpha_direct(double m, int nodes) {
  Rule r = composite_gauss(0.25, 2.0, 1, nodes);
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < r.x.size(); ++i) {
    double a = r.w[i] * symbol_alpha(r.x[i]);
    re += a * std::cos(m * r.x[i]);
    im -= a * std::sin(m * r.x[i]);
  }
  return {re, im};
}

HatAlphaTable::HatAlphaTable() : HatAlphaTable(Options{}) {}

HatAlphaTable::HatAlphaTable(const Options& opts) : opts_(opts) {
  // Trapezoid sums of alpha on a fine rho grid evaluated by one FFT. The rho
  // period P satisfies h_m = 2pi / P; the rho step is small enough that the
  // aliased copies at 2pi / d_rho - M_max sit at the round-off floor.
  std::size_t n_table = static_cast<std::size_t>(std::llround(opts_.m_max / opts_.h_m)) + 1;
  double period = 2.0 * std::numbers::pi / opts_.h_m;
  std::size_t n_fft = 1;
  while (period / n_fft > std::numbers::pi / (opts_.m_max + 4096.0) * 2.0 || n_fft < 2 * n_table) n_fft *= 2;
  double d_rho = period / n_fft;
  std::vector<cplx> buf(n_fft, cplx(0.0, 0.0));
  for (std::size_t j = 0; j < n_fft; ++j) {
    double rho = j * d_rho;
    if (rho >= 2.0) break;
    buf[j] = symbol_alpha(rho) * d_rho;
  }
  fft::c2c_1d(buf, -1);
  table_.assign(buf.begin(), buf.begin() + n_table);

  suffix_sup_.assign(n_table, 0.0);
  double run = 0.0;
  for (std::size_t j = n_table; j-- > 0;) {
    run = std::max(run, std::abs(table_[j]));
    suffix_sup_[j] = run;
  }
  max_abs_ = suffix_sup_[0];
  for (int N = 0; N <= 6; ++N) {
    double c = 0.0;
    for (std::size_t j = 0; j < n_table; ++j) {
      double m = j * opts_.h_m;
      c = std::max(c, std::abs(table_[j]) * std::pow(1.0 + m * m, 0.5 * N));
    }
    decay_[N] = c;
  }
}

HatAlphaValue HatAlphaTable::operator()(double m) const {
  if (std::abs(m) > opts_.m_max) return {envelope(m, opts_.tail_exponent), true};
  std::complex<double> out;
  simd::active().lagrange6(table_.data(), table_.size(), opts_.h_m, &m, &out, 1);
  return {out, false};
}

std::size_t HatAlphaTable::eval(const double* m, std::complex<double>* out, std::size_t n) const {
  return simd::active().lagrange6(table_.data(), table_.size(), opts_.h_m, m, out, n);
}

double HatAlphaTable::decay_constant(int N) const { return decay_[std::clamp(N, 0, 6)]; }

double HatAlphaTable::envelope(double m, int N) const {
  return decay_constant(N) * std::pow(1.0 + m * m, -0.5 * N);
}

double HatAlphaTable::tail_sup(double m) const {
  m = std::abs(m);
  if (m > opts_.m_max) return envelope(m, opts_.tail_exponent);
  auto j = static_cast<std::size_t>(std::floor(m / opts_.h_m));
  // interpolation can exceed grid values by at most the interpolation error
  return suffix_sup_[j] + 1e-12;
}

const HatAlphaTable& hat_alpha_table() {
  static const HatAlphaTable t;
  return t;
}

}  // namespace fbl
