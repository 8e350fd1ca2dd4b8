#include "fbl/norms/mixed.hpp"

#include <algorithm>
#include <cmath>

#include "fbl/core/errors.hpp"

namespace fbl {

void MixedNormSpec::validate() const {
  if (!(q_time >= 1.0) || !(r_space >= 1.0)) throw DomainError("mixed norm exponents must be >= 1");
  if (!(T_window > 0.0)) throw DomainError("mixed norm window must be positive");
}

double radial_lr_norm(const AngularSpectrumField& f, double r) {
  if (std::isinf(r)) {
    double m = 0.0;
    for (int j = 0; j < f.grid.n_r; ++j) m = std::max(m, f.l2theta_sq(j));
    return std::sqrt(m);
  }
  double s = 0.0;
  for (int j = 0; j < f.grid.n_r; ++j) s += f.grid.weights_r[j] * std::pow(f.l2theta_sq(j), 0.5 * r);
  return std::pow(s, 1.0 / r);
}

double lq_trapezoid(const std::vector<double>& g, double dt, double q, std::size_t n) {
  if (n == 0) n = g.size();
  if (n == 0) throw DomainError("empty time window");
  if (std::isinf(q)) return *std::max_element(g.begin(), g.begin() + n);
  if (n == 1) return 0.0;
  double s = 0.5 * (std::pow(g[0], q) + std::pow(g[n - 1], q));
  for (std::size_t i = 1; i + 1 < n; ++i) s += std::pow(g[i], q);
  return std::pow(s * dt, 1.0 / q);
}

double mixed_norm(const std::vector<AngularSpectrumField>& u, const std::vector<double>& times,
                  const MixedNormSpec& spec) {
  spec.validate();
  if (u.size() != times.size()) throw DomainError("one field per time sample is required");
  std::size_t n = 0;
  while (n < times.size() && times[n] <= times.front() + spec.T_window * (1.0 + 1e-12)) ++n;
  if (n == 0) throw DomainError("empty time window");
  double dt = n > 1 ? times[1] - times[0] : 0.0;
  for (std::size_t i = 1; i < n; ++i)
    if (std::abs(times[i] - times[i - 1] - dt) > 1e-9 * std::max(1.0, dt))
      throw DomainError("mixed norm needs uniform time samples");
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = radial_lr_norm(u[i], spec.r_space);
  return lq_trapezoid(g, dt, spec.q_time, n);
}

}  // namespace fbl
