#include "fbl/kernel/keystep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fbl/core/errors.hpp"
#include "fbl/core/parallel.hpp"
#include "fbl/core/quadrature.hpp"
#include "fbl/kernel/psi.hpp"
#include "fbl/specfun/bump.hpp"

namespace fbl {

double KeystepTable::upper(std::size_t d, int k) const {
  double h = head[d][std::abs(k)];
  return std::sqrt(h * h + tail[d] * tail[d]);
}

double keystep_tail_bound(double m_int, double r, double delta) {
  const auto& t = hat_alpha_table();
  double p = 1.0 - 2.0 * delta;
  auto weight = [&](double m) { return std::pow(1.0 + m * m, 0.5 * p); };
  // upper sums on unit cells: tail_sup is nonincreasing, the weight nondecreasing
  double sum = 0.0;
  double m = m_int;
  double stop = t.m_max() + r;
  while (m < stop) {
    double s = 2.0 * std::numbers::pi * t.tail_sup(m - r);
    sum += s * s * weight(m + 1.0);
    m += 1.0;
  }
  // beyond the table: C <m - r>^{-2n} <m>^p with x = m - r >= m_max, geometric cells
  int n = t.tail_exponent();
  double c = 2.0 * std::numbers::pi * t.decay_constant(n);
  double step = 1.0;
  for (int i = 0; i < 4000; ++i) {
    double x = m - r;
    double s = c * std::pow(1.0 + x * x, -0.5 * n);
    sum += s * s * weight(m + step) * step;
    m += step;
    step *= 1.01;
  }
  // remaining mass past m: integrand <= c^2 (m - r)^{-2n} (2m)^p with m >= 2r
  double x = m - r;
  sum += c * c * std::pow(2.0, p) * std::pow(2.0, p) * std::pow(x, p + 1.0 - 2.0 * n) / (2.0 * n - p - 1.0);
  return std::sqrt(2.0 * sum);
}

KeystepTable keystep_table(int K, double r, const KeystepOptions& opts) {
  KeystepTable out;
  out.r = r;
  out.deltas = opts.deltas;
  out.m_int = std::max(2.0 * r, opts.m_floor);
  const auto& t = hat_alpha_table();
  if (out.m_int > t.m_max()) throw DomainError("keystep window exceeds the hat_alpha table");
  int panels = static_cast<int>(std::ceil(out.m_int));
  Rule rule = composite_gauss(0.0, panels, panels, opts.nodes_per_unit);
  int n = psi_nodes(K, r) * opts.psi_node_factor;
  std::size_t nd = opts.deltas.size();
  std::size_t nm = rule.x.size();
  // |psi_k(-m, r)| = |psi_k(m, r)|: integrate both signs from the same samples
  std::vector<double> partial(nm * (K + 1) * nd);
  parallel_for(nm, [&](std::size_t i) {
    double m = rule.x[i];
    std::vector<cplx> a(K + 1), b(K + 1);
    psi_all_orders(K, m, r, a.data(), n);
    psi_all_orders(K, -m, r, b.data(), n);
    for (std::size_t d = 0; d < nd; ++d) {
      double w = rule.w[i] * std::pow(1.0 + m * m, 0.5 - opts.deltas[d]);
      for (int k = 0; k <= K; ++k)
        partial[(i * nd + d) * (K + 1) + k] = w * (std::norm(a[k]) + std::norm(b[k]));
    }
  });
  out.head.assign(nd, std::vector<double>(K + 1, 0.0));
  out.tail.resize(nd);
  for (std::size_t d = 0; d < nd; ++d) {
    for (std::size_t i = 0; i < nm; ++i)
      for (int k = 0; k <= K; ++k) out.head[d][k] += partial[(i * nd + d) * (K + 1) + k];
    for (int k = 0; k <= K; ++k) out.head[d][k] = std::sqrt(out.head[d][k]);
    out.tail[d] = keystep_tail_bound(out.m_int, r, opts.deltas[d]);
    double ref = *std::max_element(out.head[d].begin(), out.head[d].end());
    if (out.tail[d] > opts.tail_fraction * ref)
      throw WindowError("keystep tail bound " + std::to_string(out.tail[d]) + " exceeds " +
                        std::to_string(opts.tail_fraction) + " of head at r=" + std::to_string(r));
  }
  return out;
}

KeystepValue keystep_norm(int k, double r, double delta) {
  KeystepOptions opts;
  opts.deltas = {delta};
  auto t = keystep_table(std::abs(k), r, opts);
  return {t.head[0][std::abs(k)], t.tail[0], t.upper(0, k)};
}

}  // namespace fbl
