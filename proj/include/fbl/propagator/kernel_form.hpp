#pragma once

#include <vector>

#include "fbl/fields/field.hpp"
#include "fbl/fields/hankel.hpp"

namespace fbl {

struct KernelFormOptions {
  double s_max = 512.0;  // |s| window for the time convolution
  int nodes_per_unit = 8;
};

// one-dimensional transforms hat_h_k(s) = int h_k(rho) e^{-i s rho} d rho
// on a composite Gauss rule in s
struct TimeTransform {
  std::vector<double> s, w;
  int k_max = 0;
  std::vector<cplx> values;  // (k + k_max) * n_s + i
  const cplx* channel(int k) const { return values.data() + static_cast<std::size_t>(k + k_max) * s.size(); }
};

TimeTransform time_transform(const BandSpectrum& spec, const KernelFormOptions& opts = {});

// a_k(t, r) = ((-i)^{|k|} / (2 pi)^2) int hat_h_k(s) psi_|k|(t - s, r) ds for |k| <= k_max
std::vector<cplx> kernel_form_coefficients(const TimeTransform& tt, double t, double r);

// per-harmonic terms (2 pi)^{-5} |int hat_c_k(s) psi_k(t - s, r) ds|^2 with
// c_k = 2 pi (-i)^{|k|} h_k, ordered k = -k_max .. k_max; their sum is the
// squared L2_theta norm of the propagated field at radius r
std::vector<double> kernel_form_evaluate(const BandSpectrum& spec, double t, double r,
                                         const KernelFormOptions& opts = {});

// field version; throws DomainError unless the datum is band limited to [1/2, 1]
std::vector<double> kernel_form_evaluate(const AngularSpectrumField& f, double t, double r,
                                         const KernelFormOptions& opts = {});

}  // namespace fbl
