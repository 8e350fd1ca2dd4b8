#pragma once

#include <complex>
#include <vector>

namespace fbl {

// smooth cutoff: 0 below 1/4, rises on [1/4, 1/2], 1 on [1/2, 1], falls on
// [1, 2], 0 above 2
double bump_beta(double tau);

// alpha(rho) = rho * beta(rho)
double symbol_alpha(double rho);

// e^{-1/x} transition, 0 at x <= 0 and 1 at x >= 1
double smooth_step(double x);

struct HatAlphaValue {
  std::complex<double> value;
  bool tail = false;  // true when |m| > M_max and value holds the decay envelope
};

// Tabulated Fourier transform hat_alpha(m) = int alpha(rho) e^{-i m rho} d rho.
class HatAlphaTable {
 public:
  struct Options {
    double h_m = 1.0 / 64.0;
    double m_max = 4096.0;
    int tail_exponent = 6;
  };

  HatAlphaTable();
  explicit HatAlphaTable(const Options& opts);

  HatAlphaValue operator()(double m) const;

  // interpolated values for a batch; returns the number of samples beyond M_max
  // (those are set to zero)
  std::size_t eval(const double* m, std::complex<double>* out, std::size_t n) const;

  // decay certificate C_N = max over the grid of |hat_alpha(m)| <m>^N
  double decay_constant(int N) const;
  // certified envelope C_N <m>^{-N}
  double envelope(double m, int N) const;
  // sup of |hat_alpha| over |x| >= m, from the table then the envelope
  double tail_sup(double m) const;

  double h_m() const { return opts_.h_m; }
  double m_max() const { return opts_.m_max; }
  int tail_exponent() const { return opts_.tail_exponent; }
  const std::vector<std::complex<double>>& table() const { return table_; }
  double max_abs() const { return max_abs_; }

 private:
  Options opts_;
  std::vector<std::complex<double>> table_;
  std::vector<double> suffix_sup_;
  double decay_[7] = {};
  double max_abs_ = 0.0;
};

// shared default table, built on first use
const HatAlphaTable& hat_alpha_table();

inline HatAlphaValue hat_alpha(double m) { return hat_alpha_table()(m); }

// direct Gauss-Legendre quadrature on [1/4, 2]; reference values
std::complex<double> hat_alpha_direct(double m, int nodes = 2048);

}  // namespace fbl
