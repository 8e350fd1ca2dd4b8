#pragma once

#include <limits>
#include <vector>

#include "fbl/fields/field.hpp"

namespace fbl {

constexpr double kInf = std::numeric_limits<double>::infinity();

// L^q_t L^r_{|x|} L^2_theta over [0, T_window]
struct MixedNormSpec {
  double q_time = 2.0;
  double r_space = kInf;
  double T_window = kInf;  // infinite means the whole sample range
  void validate() const;
};

// composite trapezoid in t on uniform samples, radial Gauss quadrature with
// rho d rho (or the maximum over nodes when r = inf), Parseval in theta
double mixed_norm(const std::vector<AngularSpectrumField>& u, const std::vector<double>& times,
                  const MixedNormSpec& spec);

// (int S^{r/2} rho d rho)^{1/r} or max_j S^{1/2} for S the squared L2_theta
// profile of f
double radial_lr_norm(const AngularSpectrumField& f, double r);

// trapezoid L^q norm of uniformly spaced samples over [0, (n-1) dt]
double lq_trapezoid(const std::vector<double>& g, double dt, double q, std::size_t n = 0);

}  // namespace fbl
