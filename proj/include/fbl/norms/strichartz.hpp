#pragma once

#include <string>
#include <vector>

#include "fbl/fields/data.hpp"
#include "fbl/norms/mixed.hpp"

namespace fbl {

struct ProfileOptions {
  double T_max = 1024.0;
  double dt = 0.0;           // 0 picks 0.5 / hi
  double panel_width = 0.0;  // radial Gauss panel width; 0 picks 2 / hi
  int per_panel = 16;
  double support_tol = 1e-12;
  std::vector<double> r_exponents;  // finite spatial exponents to accumulate
};

// squared L2_theta profile S(t, r) = 2 pi sum_k |a_k(t, r)|^2 of e^{-itP} f,
// reduced over r on the fly: F(t) = max_r S^{1/2} and (int S^{r/2} rho d rho)^{1/r}.
// a_k(., r) comes from one FFT per k >= 0 of the uniformly sampled spectrum;
// real data give the negative orders from the negative-time bins.
struct SpaceTimeProfile {
  double dt = 0.0;
  double r_data = 0.0;  // support radius of the datum
  double r_ext = 0.0;   // radial extent T_max + r_data
  int n_r = 0;
  int fft_size = 0;
  std::vector<double> t;
  std::vector<double> sup;
  std::vector<double> r_exponents;
  std::vector<std::vector<double>> lr;
};

SpaceTimeProfile space_time_profile(const BandDatum& f, const ProfileOptions& opts);

// L^q norm of the profile column over [0, T] (index -1 selects the sup column);
// kappa > 0 adds the power-law tail int_T^inf (B t^{-kappa})^q dt fitted on [T/2, T]
struct TimeNorm {
  double value = 0.0;
  double tail = 0.0;  // q-th power of the tail share
  double fit_B = 0.0;
};
TimeNorm profile_time_norm(const SpaceTimeProfile& p, int column, double q, double T, double kappa = 0.0);

struct RatioSample {
  std::string datum_id;
  double q = 0.0;
  double r = 0.0;
  double gamma = 0.0;
  double T = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool skipped = false;
};

struct StrichartzReport {
  MixedNormSpec spec;
  double gamma = 0.0;
  std::vector<RatioSample> samples;
  double sup_ratio = 0.0;
  double median_ratio = 0.0;
  double tail_share = 0.0;
  std::string esssup_note = "sup over |x| taken as the maximum over radial quadrature nodes";
};

void finalize(StrichartzReport& r);

// LHS(T) = ||e^{-itP} f||_{L^2_t([0,T]) L^inf_{|x|} L^2_theta}, RHS = (ln(2+T))^{1/2} ||f||_{H^gamma}
StrichartzReport strichartz_endpoint_ratio(const BandDatum& f, double gamma, const std::vector<double>& Ts,
                                           const ProfileOptions& opts = {}, const std::string& id = "f");
StrichartzReport strichartz_endpoint_ratio(const BandDatum& f, const SpaceTimeProfile& p, double gamma,
                                           const std::vector<double>& Ts, const std::string& id = "f");

// ||e^{-itP} f||_{L^q_t([0,inf)) L^r_{|x|} L^2_theta} / ||f||_{Hdot^{1 - 1/q - 2/r}} with the time
// window closed by the dispersive tail; (q, r) = (inf, 2) is the energy identity
StrichartzReport generalized_ratio(const BandDatum& f, double q, double r, const ProfileOptions& opts = {},
                                   const std::string& id = "f");
StrichartzReport generalized_ratio(const BandDatum& f, const SpaceTimeProfile& p, double q, double r,
                                   const std::string& id = "f");

StrichartzReport strichartz_homogeneous_ratio(const BandDatum& f, double q, const ProfileOptions& opts = {},
                                              const std::string& id = "f");

// dilation study: ratios of f(lambda x) for each lambda with the window scaled by 1/lambda
struct DilationStudy {
  std::vector<double> lambdas;
  std::vector<double> ratios;
  double spread = 0.0;  // max / min - 1
};
DilationStudy dilation_study(const BandDatum& f, double q, double r, const std::vector<double>& lambdas,
                             const ProfileOptions& base);

}  // namespace fbl
