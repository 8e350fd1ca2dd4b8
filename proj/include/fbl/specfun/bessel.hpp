#pragma once

#include <cstddef>
#include <vector>

namespace fbl {

struct BesselWindow {
  int k_max = 512;
  double y_max = 4096.0;
};

const BesselWindow& bessel_window();

// J_k(y) by ascending series for small y and normalized backward recurrence
// otherwise. Throws DomainError outside the validity window.
double bessel_j(int k, double y);

// J_k(y) by the periodic trapezoid rule applied to
//   J_k(y) = ((-i)^k / 2pi) * int_0^{2pi} exp(i y cos t - i k t) dt
double bessel_j_integral(int k, double y);

// both paths; throws AccuracyError when they differ by more than tol
double bessel_j_checked(int k, double y, double tol = 1e-10);

// J_0..J_K at one argument, written to out[0..K]
void bessel_j_range(int K, double y, double* out);

// J_0..J_K for a batch of arguments, out[k*n + i]; large arguments use the
// asymptotic J_0, J_1 and upward recurrence, the rest fall back to
// bessel_j_range
void bessel_j_range_batch(int K, const double* y, std::size_t n, double* out);

// the two lowest orders from the Hankel asymptotic expansion, valid for y >= 25
void bessel_j01_asymptotic(double y, double& j0, double& j1);

}  // namespace fbl
