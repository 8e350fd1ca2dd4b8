#pragma once

#include <string>

namespace fbl {

enum class Regime { small_r_or_large_m = 0, bulk = 1, near_light_cone = 2, inside_cone = 3 };

const char* regime_name(Regime r);

struct KernelEnvelope {
  Regime regime = Regime::small_r_or_large_m;
  double d = 0.0;       // sqrt(r^2 - m^2) when r > |m|, else 0
  double theta0 = 0.0;  // r cos theta0 = |m| when r >= |m|
  double theta1 = 0.0;  // (r / d) sin theta1 = 1/2 when d > 0
  double bound_value = 0.0;
};

// piecewise pointwise bound on |psi_k(m, r)|, constant omitted
KernelEnvelope envelope(int k, double m, double r, int N = 4);

struct PhiCheck {
  double m = 0.0;
  double r = 0.0;
  double d = 0.0;
  double beta_lo = 0.0;
  double beta_hi = 0.0;
  int samples = 0;
  double min_slope_slack = 0.0;   // min phi' - 1/2
  double min_growth_slack = 0.0;  // min 1 + |phi| - phi'
  double min_lower_slack = 0.0;   // min |phi| - |beta| / 2
  bool passed = false;
};

// samples phi(beta) = m - r cos(theta0 + beta / d) on [d(theta1 - theta0), d(3pi/4 - theta0)]
PhiCheck phi_properties_check(double m, double r, int samples = 4001);

}  // namespace fbl
