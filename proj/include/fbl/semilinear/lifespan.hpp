#pragma once

#include <string>
#include <vector>

#include "fbl/semilinear/solver.hpp"

namespace fbl {

struct LifespanConfig {
  int p = 3;
  double width = 2.0;  // bump width
  double s = 2.0;      // data norm H^s x H^{s-1}
  WaveGrid grid{256, 128.0};
  double horizon = 40.0;
  SolverOptions solver;
  double coef = 0.0;   // 0 selects the calibrated value
  std::vector<double> eps{0.6, 0.7, 0.8, 0.9, 1.0, 1.2};
  int min_points = 5;
};

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  int points = 0;
};

// least squares y = slope x + intercept
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

struct CalibrationStep {
  double coef = 0.0;
  double T = 0.0;
  bool finite = false;
};

struct LifespanReport {
  LifespanConfig config;
  double coef = 0.0;
  std::vector<CalibrationStep> calibration;
  std::vector<LifespanRecord> records;
  LineFit fit_eps2;   // log T against eps^-2
  LineFit fit_epsp;   // log T against eps^-(p-1)
  std::string status; // pass, fail or inconclusive
};

// u0 = u1 = A phi with ||u0||_{H^s} + ||u1||_{H^{s-1}} = eps
std::pair<std::vector<double>, std::vector<double>> lifespan_data(const LifespanConfig& cfg, double eps);

LifespanRecord lifespan_run(const LifespanConfig& cfg, double coef, double eps);

// smallest coefficient on the ladder 10^{j/4}, j = 0..32, for which the
// min_points-th largest eps blows up before the horizon
double calibrate_coefficient(const LifespanConfig& cfg, std::vector<CalibrationStep>* trail = nullptr);

LifespanReport lifespan_sweep(const LifespanConfig& cfg);

struct ScalingCheck {
  double lambda = 0.0;
  double T_base = 0.0;
  double T_scaled = 0.0;
  double rel_error = 0.0;  // |lambda T_scaled / T_base - 1|
};

// u -> lambda^{-1/2} u(lambda t, lambda x) for coef (d_t u)^3
ScalingCheck scaling_check(const LifespanConfig& cfg, double coef, double eps, double lambda);

}  // namespace fbl
