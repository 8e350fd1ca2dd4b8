#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fbl/fields/cartesian.hpp"
#include "fbl/fields/sobolev.hpp"

namespace fbl {

// ((2/n)(1 - delta)/delta)^{(1 - delta)/2}
double interp_factor(double delta, int n = 2);

struct InterpSample {
  std::string id;
  double delta = 0.0;
  double factor = 0.0;
  double lhs = 0.0;   // grid max of |f|
  double hdot = 0.0;  // ||f||_{Hdot^{1/(1 - delta)}}
  double l2 = 0.0;
  double c_emp = 0.0;
};

// one field, one delta; throws ResolutionError when the Hdot integrand is
// not resolved by the grid
InterpSample interp_sample(const CartesianField& f, double delta, const std::string& id = "f");

struct InterpReport {
  std::vector<InterpSample> samples;  // coarse grid
  std::vector<double> deltas;
  std::vector<double> sup_by_delta;
  std::vector<double> sup_by_delta_refined;
  double sup_c = 0.0;
  double sup_c_refined = 0.0;
  double refinement_change = 0.0;  // max over delta of relative change of the sup
  std::uint64_t seed = 0;
  int family_size = 0;
  bool passed = false;
};

// seeded family of Gaussian sums sampled on a grid and on its 2x refinement
CartesianField interp_family_member(std::uint64_t seed, int index, const CartesianGrid& g);
InterpReport interp_bound_check(const std::vector<double>& deltas, int family_size, std::uint64_t seed,
                                const CartesianGrid& grid = {320, 0.1});

struct GrowthSample {
  double t = 0.0;
  double l2 = 0.0;
  double l2_bound = 0.0;
  double linf = 0.0;
  double linf_bound = 0.0;  // without the constant
  double c_emp = 0.0;
};

struct GrowthReport {
  double delta = 0.0;
  double s = 0.0;
  std::vector<GrowthSample> samples;
  double min_l2_slack = 0.0;  // min of bound - value, relative to the bound
  double c_emp_max = 0.0;
  bool passed = false;
};

// u and u_t sampled at increasing times starting at 0
GrowthReport growth_bound_check(const std::vector<double>& t, const std::vector<CartesianField>& u,
                                const std::vector<CartesianField>& ut, double delta, double s);

struct RadialProfile {
  std::function<double(double)> psi;  // psi(|x|)
  std::function<double(double)> hat;  // optional 2-D transform in |xi|
  double extent = 0.0;                // psi negligible beyond this radius
  static RadialProfile gaussian(double sigma);  // unit mass
  RadialProfile scaled(double lambda) const;    // lambda^2 psi(lambda x)
};

// radial 2-D Fourier transform 2 pi int psi(r) J_0(xi r) r dr
double radial_transform(const RadialProfile& p, double xi);
double radial_l1(const RadialProfile& p);

struct ConvolutionReport {
  double l1 = 0.0;
  double lhs = 0.0;     // ||psi * f||_{L^inf_r L^2_theta}
  double f_norm = 0.0;  // ||f||_{L^inf_r L^2_theta}
  double ratio = 0.0;   // lhs / (l1 f_norm)
};

// convolution by an FFT multiplier on the Cartesian grid, then polar analysis
ConvolutionReport radial_convolution_bound(const RadialProfile& psi, const AngularSpectrumField& f,
                                           const CartesianGrid& grid);

// product of two fields by convolution of angular coefficients
AngularSpectrumField product(const AngularSpectrumField& f, const AngularSpectrumField& g);

// sup_r (2 pi sum_k (1 + k^2)^b |a_k(r)|^2)^{1/2}
double linf_radial_hb(const AngularSpectrumField& f, double b);

struct LeibnizReport {
  double lhs = 0.0;
  double f_inf = 0.0;
  double g_norm = 0.0;
  double g_inf = 0.0;
  double f_norm = 0.0;
  double rhs = 0.0;
  double c_emp = 0.0;
  bool skipped = false;  // both sides vanish
};

LeibnizReport leibniz_check(const AngularSpectrumField& f, const AngularSpectrumField& g, const SobolevSpec& spec,
                            const CartesianGrid& grid);

}  // namespace fbl
