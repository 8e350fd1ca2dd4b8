#pragma once

#include <vector>

namespace fbl {

struct DyadicRange {
  int lo = 0;
  int hi = 0;
  static DyadicRange standard(double delta);  // [-128, ceil(128 / delta) + 16]
};

struct DyadicValue {
  double T = 0.0;
  double delta = 0.0;
  double sum = 0.0;
  double ratio = 0.0;  // sum / (ln(2 + T))^{1/2}
};

// sum_j 2^{j/2} (1 + 2^j)^{-1/2 - delta} (ln(2 + 2^j T))^{1/2}
DyadicValue dyadic_log_sum(double T, double delta, DyadicRange range);
DyadicValue dyadic_log_sum(double T, double delta);

struct DyadicCheck {
  std::vector<DyadicValue> values;
  std::vector<double> deltas;
  std::vector<double> sup_ratio;      // per delta over the T samples
  std::vector<double> plateau;        // per delta, sup of the ratio over T in [2^10, 2^20]
  std::vector<double> at_2_10;        // per delta, ratio at T = 2^10
  double widening_change = 0.0;       // max change when both range ends widen by 16
  bool passed = false;
};

// T samples: 1e-6 plus dyadic 2^-20 .. 2^20 and e
DyadicCheck dyadic_check(const std::vector<double>& deltas);

}  // namespace fbl
