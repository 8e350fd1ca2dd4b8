#include <immintrin.h>

#include <cmath>

#include "fbl/simd/kernels.hpp"

namespace fbl::simd {

cplx lagrange6_point(const cplx* table, std::size_t table_n, double h, double m, bool& outside);

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

// complex arrays are interleaved (re, im); one __m256d holds two entries

cplx rdot(const double* w, const cplx* x, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d w01 = _mm256_set_pd(w[i + 1], w[i + 1], w[i], w[i]);
    __m256d w23 = _mm256_set_pd(w[i + 3], w[i + 3], w[i + 2], w[i + 2]);
    acc0 = _mm256_fmadd_pd(w01, _mm256_loadu_pd(xd + 2 * i), acc0);
    acc1 = _mm256_fmadd_pd(w23, _mm256_loadu_pd(xd + 2 * i + 4), acc1);
  }
  __m256d acc = _mm256_add_pd(acc0, acc1);
  alignas(32) double t[4];
  _mm256_store_pd(t, acc);
  double re = t[0] + t[2], im = t[1] + t[3];
  for (; i < n; ++i) {
    re += w[i] * x[i].real();
    im += w[i] * x[i].imag();
  }
  return {re, im};
}

void axpy(cplx a, const double* x, cplx* y, std::size_t n) {
  double* yd = reinterpret_cast<double*>(y);
  __m256d are = _mm256_set1_pd(a.real()), aim = _mm256_set1_pd(a.imag());
  __m256d ab = _mm256_blend_pd(are, aim, 0b1010);  // (re, im, re, im)
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xx = _mm256_set_pd(x[i + 1], x[i + 1], x[i], x[i]);
    __m256d yy = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_fmadd_pd(ab, xx, yy));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void accum_abs2(const cplx* x, double* acc, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d a = _mm256_loadu_pd(xd + 2 * i);      // r0 i0 r1 i1
    __m256d b = _mm256_loadu_pd(xd + 2 * i + 4);  // r2 i2 r3 i3
    __m256d sa = _mm256_mul_pd(a, a);
    __m256d sb = _mm256_mul_pd(b, b);
    __m256d hs = _mm256_hadd_pd(sa, sb);  // |x0|^2 |x2|^2 |x1|^2 |x3|^2
    hs = _mm256_permute4x64_pd(hs, 0b11011000);
    _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i), hs));
  }
  for (; i < n; ++i) acc[i] += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
}

double wnorm2(const double* w, const cplx* x, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d a = _mm256_loadu_pd(xd + 2 * i);
    __m256d b = _mm256_loadu_pd(xd + 2 * i + 4);
    __m256d hs = _mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
    hs = _mm256_permute4x64_pd(hs, 0b11011000);
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), hs, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += w[i] * (x[i].real() * x[i].real() + x[i].imag() * x[i].imag());
  return s;
}

void scaled_power(const double* x, double coef, int p, double* out, std::size_t n) {
  __m256d c = _mm256_set1_pd(coef);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_loadu_pd(x + i), acc = v;
    for (int k = 1; k < p; ++k) acc = _mm256_mul_pd(acc, v);
    _mm256_storeu_pd(out + i, _mm256_mul_pd(c, acc));
  }
  for (; i < n; ++i) {
    double v = x[i], acc = v;
    for (int k = 1; k < p; ++k) acc *= v;
    out[i] = coef * acc;
  }
}

void wave_rotate(const double* c, const double* sk, const double* ks, const cplx* u, const cplx* v,
                 cplx* uo, cplx* vo, std::size_t n) {
  const double* ud = reinterpret_cast<const double*>(u);
  const double* vd = reinterpret_cast<const double*>(v);
  double* uod = reinterpret_cast<double*>(uo);
  double* vod = reinterpret_cast<double*>(vo);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d cc = _mm256_set_pd(c[i + 1], c[i + 1], c[i], c[i]);
    __m256d ss = _mm256_set_pd(sk[i + 1], sk[i + 1], sk[i], sk[i]);
    __m256d kk = _mm256_set_pd(ks[i + 1], ks[i + 1], ks[i], ks[i]);
    __m256d a = _mm256_loadu_pd(ud + 2 * i);
    __m256d b = _mm256_loadu_pd(vd + 2 * i);
    __m256d nu = _mm256_fmadd_pd(cc, a, _mm256_mul_pd(ss, b));
    __m256d nv = _mm256_fnmadd_pd(kk, a, _mm256_mul_pd(cc, b));
    _mm256_storeu_pd(uod + 2 * i, nu);
    _mm256_storeu_pd(vod + 2 * i, nv);
  }
  for (; i < n; ++i) {
    cplx a = u[i], b = v[i];
    uo[i] = c[i] * a + sk[i] * b;
    vo[i] = -ks[i] * a + c[i] * b;
  }
}

std::size_t lagrange6(const cplx* table, std::size_t table_n, double h, const double* m, cplx* out,
                      std::size_t n) {
  const double* td = reinterpret_cast<const double*>(table);
  const double inv_h = 1.0 / h;
  const long top = static_cast<long>(table_n) - 6;
  const __m256d denom_inv[6] = {_mm256_set1_pd(-1.0 / 120.0), _mm256_set1_pd(1.0 / 24.0),
                                _mm256_set1_pd(-1.0 / 12.0),  _mm256_set1_pd(1.0 / 12.0),
                                _mm256_set1_pd(-1.0 / 24.0),  _mm256_set1_pd(1.0 / 120.0)};
  std::size_t outside_count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    alignas(32) double ax[4];
    alignas(32) long long base[4];
    bool simple = true;
    for (int l = 0; l < 4; ++l) {
      ax[l] = std::abs(m[i + l]) * inv_h;
      long i0 = static_cast<long>(std::floor(ax[l])) - 2;
      if (i0 < 0 || i0 > top) simple = false;
      base[l] = 2 * i0;
    }
    if (!simple) {
      for (int l = 0; l < 4; ++l) {
        bool outside;
        out[i + l] = lagrange6_point(table, table_n, h, m[i + l], outside);
        outside_count += outside;
      }
      continue;
    }
    __m256d x = _mm256_load_pd(ax);
    __m256i b = _mm256_load_si256(reinterpret_cast<const __m256i*>(base));
    __m256d s = _mm256_sub_pd(x, _mm256_round_pd(x, _MM_FROUND_TO_NEG_INF | _MM_FROUND_NO_EXC));
    s = _mm256_add_pd(s, _mm256_set1_pd(2.0));
    __m256d d[6];
    for (int j = 0; j < 6; ++j) d[j] = _mm256_sub_pd(s, _mm256_set1_pd(static_cast<double>(j)));
    __m256d re = _mm256_setzero_pd(), im = _mm256_setzero_pd();
    for (int j = 0; j < 6; ++j) {
      __m256d w = denom_inv[j];
      for (int q = 0; q < 6; ++q)
        if (q != j) w = _mm256_mul_pd(w, d[q]);
      __m256i idx = _mm256_add_epi64(b, _mm256_set1_epi64x(2 * j));
      __m256d tr = _mm256_i64gather_pd(td, idx, 8);
      __m256d ti = _mm256_i64gather_pd(td + 1, idx, 8);
      re = _mm256_fmadd_pd(w, tr, re);
      im = _mm256_fmadd_pd(w, ti, im);
    }
    alignas(32) double rr[4], ii[4];
    _mm256_store_pd(rr, re);
    _mm256_store_pd(ii, im);
    for (int l = 0; l < 4; ++l) out[i + l] = cplx(rr[l], m[i + l] < 0.0 ? -ii[l] : ii[l]);
  }
  for (; i < n; ++i) {
    bool outside;
    out[i] = lagrange6_point(table, table_n, h, m[i], outside);
    outside_count += outside;
  }
  return outside_count;
}

void bessel_forward(const double* y, const double* j0, const double* j1, int K, double* out,
                    std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d two_over_y = _mm256_div_pd(_mm256_set1_pd(2.0), _mm256_loadu_pd(y + i));
    __m256d prev = _mm256_loadu_pd(j0 + i);
    _mm256_storeu_pd(out + i, prev);
    if (K < 1) continue;
    __m256d cur = _mm256_loadu_pd(j1 + i);
    _mm256_storeu_pd(out + n + i, cur);
    for (int k = 1; k < K; ++k) {
      __m256d f = _mm256_mul_pd(_mm256_set1_pd(static_cast<double>(k)), two_over_y);
      __m256d next = _mm256_fmsub_pd(f, cur, prev);
      _mm256_storeu_pd(out + (k + 1) * n + i, next);
      prev = cur;
      cur = next;
    }
  }
  for (; i < n; ++i) {
    out[i] = j0[i];
    if (K >= 1) out[n + i] = j1[i];
    double two_over_y = 2.0 / y[i];
    for (int k = 1; k < K; ++k) out[(k + 1) * n + i] = k * two_over_y * out[k * n + i] - out[(k - 1) * n + i];
  }
}

}  // namespace

const Kernels* avx2_kernels_impl() {
  static const Kernels k{"avx2", rdot, axpy, accum_abs2, wnorm2, scaled_power, wave_rotate, lagrange6, bessel_forward};
  return &k;
}

}  // namespace fbl::simd
