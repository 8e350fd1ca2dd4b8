#include <cmath>

#include "fbl/simd/kernels.hpp"

namespace fbl::simd {

namespace {

cplx rdot(const double* w, const cplx* x, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += w[i] * x[i].real();
    im += w[i] * x[i].imag();
  }
  return {re, im};
}

void axpy(cplx a, const double* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void accum_abs2(const cplx* x, double* acc, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
}

double wnorm2(const double* w, const cplx* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += w[i] * (x[i].real() * x[i].real() + x[i].imag() * x[i].imag());
  return s;
}

void scaled_power(const double* x, double coef, int p, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double v = x[i], acc = v;
    for (int k = 1; k < p; ++k) acc *= v;
    out[i] = coef * acc;
  }
}

void wave_rotate(const double* c, const double* sk, const double* ks, const cplx* u, const cplx* v,
                 cplx* uo, cplx* vo, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    cplx a = u[i], b = v[i];
    uo[i] = c[i] * a + sk[i] * b;
    vo[i] = -ks[i] * a + c[i] * b;
  }
}

}  // namespace

cplx lagrange6_point(const cplx* table, std::size_t table_n, double h, double m, bool& outside) {
  bool neg = m < 0.0;
  double x = std::abs(m) / h;
  outside = false;
  if (x > static_cast<double>(table_n - 1)) {
    outside = true;
    return {0.0, 0.0};
  }
  long i0 = static_cast<long>(std::floor(x)) - 2;
  long top = static_cast<long>(table_n) - 6;
  if (i0 > top) i0 = top;
  double s = x - static_cast<double>(i0);
  double d[6];
  for (int j = 0; j < 6; ++j) d[j] = s - j;
  static const double denom[6] = {-120.0, 24.0, -12.0, 12.0, -24.0, 120.0};
  double re = 0.0, im = 0.0;
  for (int j = 0; j < 6; ++j) {
    double l = 1.0;
    for (int q = 0; q < 6; ++q)
      if (q != j) l *= d[q];
    l /= denom[j];
    long idx = i0 + j;
    cplx t = idx >= 0 ? table[idx] : std::conj(table[-idx]);
    re += l * t.real();
    im += l * t.imag();
  }
  return neg ? cplx(re, -im) : cplx(re, im);
}

namespace {

std::size_t lagrange6(const cplx* table, std::size_t table_n, double h, const double* m, cplx* out,
                      std::size_t n) {
  std::size_t outside_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool outside;
    out[i] = lagrange6_point(table, table_n, h, m[i], outside);
    outside_count += outside;
  }
  return outside_count;
}

void bessel_forward(const double* y, const double* j0, const double* j1, int K, double* out,
                    std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = j0[i];
    if (K >= 1) out[n + i] = j1[i];
    double two_over_y = 2.0 / y[i];
    for (int k = 1; k < K; ++k) out[(k + 1) * n + i] = k * two_over_y * out[k * n + i] - out[(k - 1) * n + i];
  }
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{"scalar", rdot, axpy, accum_abs2, wnorm2, scaled_power, wave_rotate, lagrange6, bessel_forward};
  return k;
}

}  // namespace fbl::simd
