#include "fbl/kernel/psi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fbl/core/errors.hpp"
#include "fbl/core/fft.hpp"
#include "fbl/specfun/bump.hpp"

namespace fbl {

int psi_nodes(int K, double r) {
  double n = r + 0.5 * K + 8.0 * std::cbrt(2.0 * r + 1.0) + 24.0;
  int v = 16;
  n = std::max(n, K + 16.0);
  while (v < n) v += 16;
  return v;
}

double psi_table_tail(double m, double r) {
  const auto& t = hat_alpha_table();
  if (std::abs(m) + r <= t.m_max()) return 0.0;
  return 2.0 * std::numbers::pi * t.envelope(t.m_max(), t.tail_exponent());
}

void psi_all_orders(int K, double m, double r, cplx* out, int n) {
  if (n <= 0) n = psi_nodes(K, r);
  if (K > n) throw DomainError("psi_all_orders needs n >= K");
  std::vector<double> args(n + 1);
  for (int j = 0; j <= n; ++j) args[j] = m - r * std::cos(std::numbers::pi * j / n);
  std::vector<cplx> g(n + 1);
  hat_alpha_table().eval(args.data(), g.data(), g.size());
  std::vector<double> re(n + 1), im(n + 1);
  for (int j = 0; j <= n; ++j) {
    re[j] = g[j].real();
    im[j] = g[j].imag();
  }
  fft::dct1(re.data(), n + 1);
  fft::dct1(im.data(), n + 1);
  double scale = std::numbers::pi / n;
  for (int k = 0; k <= K; ++k) out[k] = cplx(re[k], im[k]) * scale;
}

cplx psi_direct(int k, double m, double r, int n) {
  const auto& t = hat_alpha_table();
  int total = 2 * n;
  std::vector<double> args(total);
  for (int j = 0; j < total; ++j) args[j] = m - r * std::cos(std::numbers::pi * j / n);
  std::vector<cplx> g(total);
  t.eval(args.data(), g.data(), g.size());
  cplx s = 0.0;
  for (int j = 0; j < total; ++j) s += std::polar(1.0, -k * std::numbers::pi * j / n) * g[j];
  return s * (std::numbers::pi / n);
}

KernelSample psi(int k, double m, double r, double tol) {
  const auto& t = hat_alpha_table();
  if (r < 0.0 || std::abs(m) > t.m_max()) throw DomainError("psi argument outside window");
  int K = std::abs(k);
  int n = psi_nodes(K, r);
  std::vector<cplx> a(K + 1), b(K + 1);
  psi_all_orders(K, m, r, a.data(), n);
  double table_tail = psi_table_tail(m, r);
  for (int level = 0; level < 8; ++level) {
    psi_all_orders(K, m, r, b.data(), 2 * n);
    double diff = std::abs(b[K] - a[K]);
    if (diff <= tol) return {k, m, r, b[K], diff + table_tail, 2 * n};
    a = b;
    n *= 2;
  }
  throw AccuracyError("psi quadrature did not converge at k=" + std::to_string(k) + " m=" + std::to_string(m) +
                          " r=" + std::to_string(r),
                      std::abs(b[K] - a[K]));
}

}  // namespace fbl
