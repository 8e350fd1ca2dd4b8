#include "fbl/kernel/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fbl/core/errors.hpp"

namespace fbl {

namespace {

double bracket(double x) { return std::sqrt(1.0 + x * x); }

}  // namespace

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::small_r_or_large_m: return "small_r_or_large_m";
    case Regime::bulk: return "bulk";
    case Regime::near_light_cone: return "near_light_cone";
    case Regime::inside_cone: return "inside_cone";
  }
  return "unknown";
}

KernelEnvelope envelope(int k, double m, double r, int N) {
  if (r < 0.0) throw DomainError("envelope needs r >= 0");
  KernelEnvelope e;
  double am = std::abs(m);
  double ak = std::abs(k);
  if (r >= am && r > 0.0) {
    e.d = std::sqrt(r * r - am * am);
    e.theta0 = std::acos(std::min(1.0, am / r));
    if (e.d > 0.0) e.theta1 = std::asin(std::min(1.0, e.d / (2.0 * r)));
  }
  if (r <= 1.0 || am >= 2.0 * r) {
    e.regime = Regime::small_r_or_large_m;
    e.bound_value = std::pow(bracket(m), -N);
  } else if (am <= 0.5 * r) {
    e.regime = Regime::bulk;
    e.bound_value = 1.0 / r;
  } else if (r < am + 1.0) {
    e.regime = Regime::near_light_cone;
    e.bound_value = std::pow(bracket(r + am), -N) + std::pow(r, -0.5) * std::pow(bracket(am - r), -N);
  } else {
    e.regime = Regime::inside_cone;
    double mixed = 0.0;
    if (ak > 0.0) mixed = std::min(ak / e.d, e.d / ak);
    double gap = bracket(am - r);
    e.bound_value = std::pow(bracket(r + am), -N) + std::pow(r, -0.5) * std::pow(gap, -1.5) +
                    std::pow(r, -0.5) * std::pow(gap, -0.5) * mixed;
  }
  return e;
}

PhiCheck phi_properties_check(double m, double r, int samples) {
  if (m < 0.0 || r < m + 1.0) throw DomainError("phi check needs m >= 0 and r >= m + 1");
  if (samples < 2) throw DomainError("phi check needs at least two samples");
  PhiCheck c;
  c.m = m;
  c.r = r;
  c.samples = samples;
  c.d = std::sqrt(r * r - m * m);
  double theta0 = std::acos(m / r);
  double theta1 = std::asin(c.d / (2.0 * r));
  c.beta_lo = c.d * (theta1 - theta0);
  c.beta_hi = c.d * (0.75 * std::numbers::pi - theta0);
  c.min_slope_slack = c.min_growth_slack = c.min_lower_slack = INFINITY;
  for (int i = 0; i < samples; ++i) {
    double beta = c.beta_lo + (c.beta_hi - c.beta_lo) * i / (samples - 1);
    double theta = theta0 + beta / c.d;
    // r (cos theta0 - cos theta) in product form
    double half = 0.5 * beta / c.d;
    double phi = 2.0 * r * std::sin(theta0 + half) * std::sin(half);
    double dphi = (r / c.d) * std::sin(theta);
    c.min_slope_slack = std::min(c.min_slope_slack, dphi - 0.5);
    c.min_growth_slack = std::min(c.min_growth_slack, 1.0 + std::abs(phi) - dphi);
    c.min_lower_slack = std::min(c.min_lower_slack, std::abs(phi) - 0.5 * std::abs(beta));
  }
  c.passed = c.min_slope_slack >= -1e-9 && c.min_growth_slack >= -1e-9 && c.min_lower_slack >= -1e-9;
  return c;
}

}  // namespace fbl
