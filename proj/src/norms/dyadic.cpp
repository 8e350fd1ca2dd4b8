#include "fbl/norms/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fbl/core/errors.hpp"

namespace fbl {

DyadicRange DyadicRange::standard(double delta) {
  return {-128, static_cast<int>(std::ceil(128.0 / delta)) + 16};
}

DyadicValue dyadic_log_sum(double T, double delta, DyadicRange range) {
  if (!(delta > 0.0)) throw DomainError("dyadic sum needs delta > 0");
  if (!(T >= 0.0)) throw DomainError("dyadic sum needs T >= 0");
  const double ln2 = std::numbers::ln2;
  std::vector<double> terms;
  for (int j = range.lo; j <= range.hi; ++j) {
    double jl = j * ln2;
    double l1 = j > 0 ? jl + std::log1p(std::ldexp(1.0, -j)) : std::log1p(std::ldexp(1.0, j));
    double lt = ln2;
    if (T > 0.0) {
      double a = jl + std::log(T);
      lt = std::max(a, ln2) + std::log1p(std::exp(-std::abs(a - ln2)));
    }
    terms.push_back(std::exp(0.5 * jl - (0.5 + delta) * l1) * std::sqrt(lt));
  }
  // summed from the smallest terms up
  std::sort(terms.begin(), terms.end());
  double s = 0.0;
  for (double v : terms) s += v;
  return {T, delta, s, s / std::sqrt(std::log(2.0 + T))};
}

DyadicValue dyadic_log_sum(double T, double delta) { return dyadic_log_sum(T, delta, DyadicRange::standard(delta)); }

DyadicCheck dyadic_check(const std::vector<double>& deltas) {
  DyadicCheck c;
  c.deltas = deltas;
  std::vector<double> Ts = {1e-6, std::numbers::e};
  for (int j = -20; j <= 20; ++j) Ts.push_back(std::ldexp(1.0, j));
  std::sort(Ts.begin(), Ts.end());
  for (double d : deltas) {
    double sup = 0.0, plateau = 0.0, at = 0.0;
    DyadicRange base = DyadicRange::standard(d);
    for (double T : Ts) {
      DyadicValue v = dyadic_log_sum(T, d, base);
      DyadicValue w = dyadic_log_sum(T, d, {base.lo - 16, base.hi + 16});
      c.widening_change = std::max(c.widening_change, std::abs(w.ratio - v.ratio));
      c.values.push_back(v);
      sup = std::max(sup, v.ratio);
      if (T >= 1024.0) plateau = std::max(plateau, v.ratio);
      if (T == 1024.0) at = v.ratio;
    }
    c.sup_ratio.push_back(sup);
    c.plateau.push_back(plateau);
    c.at_2_10.push_back(at);
  }
  c.passed = c.widening_change <= 1e-9;
  for (std::size_t i = 0; i < deltas.size(); ++i)
    c.passed = c.passed && std::isfinite(c.sup_ratio[i]) && c.at_2_10[i] <= 1.05 * c.plateau[i];
  return c;
}

}  // namespace fbl
