#pragma once

#include <complex>
#include <cstddef>

namespace fbl::simd {

using cplx = std::complex<double>;

// Hot inner loops with one scalar reference and one AVX2 variant each.
// The active table is chosen once at startup from CPUID; FBL_SIMD=scalar
// forces the reference path.
struct Kernels {
  const char* name;

  // sum_i w[i] * x[i]
  cplx (*rdot)(const double* w, const cplx* x, std::size_t n);

  // y[i] += a * x[i]
  void (*axpy)(cplx a, const double* x, cplx* y, std::size_t n);

  // acc[i] += |x[i]|^2
  void (*accum_abs2)(const cplx* x, double* acc, std::size_t n);

  // sum_i w[i] * |x[i]|^2
  double (*wnorm2)(const double* w, const cplx* x, std::size_t n);

  // out[i] = coef * x[i]^p, p >= 1
  void (*scaled_power)(const double* x, double coef, int p, double* out, std::size_t n);

  // exact linear wave substep on a spectral pair:
  //   u' = c u + sk v,  v' = -ks u + c v
  // with c = cos(|xi| tau), sk = sin(|xi| tau)/|xi|, ks = |xi| sin(|xi| tau)
  void (*wave_rotate)(const double* c, const double* sk, const double* ks, const cplx* u,
                      const cplx* v, cplx* uo, cplx* vo, std::size_t n);

  // six-point Lagrange interpolation of a table sampled at j*h, j >= 0, with
  // Hermitian extension to negative abscissae; entries beyond the table give 0
  // and are counted in the return value
  std::size_t (*lagrange6)(const cplx* table, std::size_t table_n, double h, const double* m,
                           cplx* out, std::size_t n);

  // forward recurrence J_{k+1} = (2k/y) J_k - J_{k-1} for a batch of
  // arguments; out[k*n + i] for k in [0, K]
  void (*bessel_forward)(const double* y, const double* j0, const double* j1, int K, double* out,
                         std::size_t n);
};

const Kernels& scalar_kernels();
const Kernels* avx2_kernels();  // nullptr when the CPU lacks AVX2/FMA
const Kernels& active();

}  // namespace fbl::simd
