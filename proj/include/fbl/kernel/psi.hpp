#pragma once

#include <complex>
#include <vector>

namespace fbl {

using cplx = std::complex<double>;

struct KernelSample {
  int k = 0;
  double m = 0.0;
  double r = 0.0;
  cplx value;
  double error = 0.0;  // estimated absolute quadrature error
  int nodes = 0;       // half-circle node count of the accepted rule
};

// psi_k(m, r) = int_0^{2pi} e^{-ik theta} hat_alpha(m - r cos theta) d theta
// by the periodic trapezoid rule, doubling nodes until two levels agree to tol.
// Throws AccuracyError when the cap is reached first.
KernelSample psi(int k, double m, double r, double tol = 1e-9);

// psi_0..psi_K at (m, r) from one DCT-I of hat_alpha samples on n + 1
// half-circle nodes; n = 0 picks psi_nodes(K, r)
void psi_all_orders(int K, double m, double r, cplx* out, int n = 0);

// full-circle trapezoid sum with e^{-ik theta} weights, 2n nodes; used as an
// independent route for symmetry checks
cplx psi_direct(int k, double m, double r, int n);

// half-circle node count resolving orders <= K at radius r
int psi_nodes(int K, double r);

// upper bound on |psi_k(m, r)| from contributions with |argument| > M_max
double psi_table_tail(double m, double r);

}  // namespace fbl
