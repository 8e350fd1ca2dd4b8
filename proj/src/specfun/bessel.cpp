#include "fbl/specfun/bessel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fbl/core/errors.hpp"
#include "fbl/simd/kernels.hpp"

namespace fbl {

namespace {

constexpr double kSeriesLimit = 2.0;
constexpr double kAsymptoticMin = 25.0;

void check_window(int k, double y) {
  const auto& w = bessel_window();
  if (k < 0 || k > w.k_max || !(y >= 0.0) || y > w.y_max) {
    throw DomainError("bessel argument outside window: k=" + std::to_string(k) + " y=" + std::to_string(y));
  }
}

double series(int k, double y) {
  double half = 0.5 * y;
  double term = std::exp(k * std::log(half) - std::lgamma(k + 1.0));
  double q = -half * half;
  double sum = term;
  for (int m = 1; m < 200; ++m) {
    term *= q / (static_cast<double>(m) * (m + k));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

int miller_start(int K, double y) {
  double top = std::max(static_cast<double>(K), y);
  int n = static_cast<int>(top + 30.0 + 15.0 * std::cbrt(top));
  return n + (n % 2);
}

// normalized backward recurrence, fills out[0..K]
void miller(int K, double y, double* out) {
  int start = miller_start(K, y);
  double two_over_y = 2.0 / y;
  double jp1 = 0.0, j = 1e-300, norm = 0.0;
  for (int m = start; m >= 1; --m) {
    double jm1 = m * two_over_y * j - jp1;
    jp1 = j;
    j = jm1;
    if (m - 1 <= K) out[m - 1] = j;
    if ((m - 1) % 2 == 0 && m - 1 > 0) norm += 2.0 * j;
    if (std::abs(j) > 1e250) {
      j *= 1e-250;
      jp1 *= 1e-250;
      norm *= 1e-250;
      for (int q = m - 1; q <= K; ++q) out[q] *= 1e-250;
    }
  }
  norm += j;
  double inv = 1.0 / norm;
  for (int q = 0; q <= K; ++q) out[q] *= inv;
}

}  // namespace

const BesselWindow& bessel_window() {
  static const BesselWindow w;
  return w;
}

void bessel_j01_asymptotic(double y, double& j0, double& j1) {
  // P, Q series for nu = 0 and nu = 1
  double z = 8.0 * y;
  double p0 = 1.0, q0 = 0.0, p1 = 1.0, q1 = 0.0;
  double t0 = 1.0, t1 = 1.0;
  for (int k = 1; k <= 30; ++k) {
    double a0 = (0.0 - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (k * z);
    double a1 = (4.0 - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (k * z);
    double n0 = t0 * a0, n1 = t1 * a1;
    if (std::abs(n0) > std::abs(t0) && k > 2) break;
    t0 = n0;
    t1 = n1;
    double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      p0 += sign * t0;
      p1 += sign * t1;
    } else {
      q0 += sign * t0;
      q1 += sign * t1;
    }
    if (std::abs(t0) < 1e-17 && std::abs(t1) < 1e-17) break;
  }
  // cos(y - pi/4) and cos(y - 3pi/4) built from exact sin/cos of y
  double s = std::sin(y), c = std::cos(y);
  double r = std::numbers::sqrt2 / 2.0;
  double c0 = r * (c + s), s0 = r * (s - c);
  double c1 = r * (s - c), s1 = -r * (c + s);
  double amp = std::sqrt(2.0 / (std::numbers::pi * y));
  j0 = amp * (p0 * c0 - q0 * s0);
  j1 = amp * (p1 * c1 - q1 * s1);
}

void bessel_j_range(int K, double y, double* out) {
  if (y == 0.0) {
    for (int k = 0; k <= K; ++k) out[k] = k == 0 ? 1.0 : 0.0;
    return;
  }
  if (y < kSeriesLimit) {
    for (int k = 0; k <= K; ++k) out[k] = series(k, y);
    return;
  }
  if (y >= kAsymptoticMin && K <= 0.8 * y) {
    double j0, j1;
    bessel_j01_asymptotic(y, j0, j1);
    out[0] = j0;
    if (K >= 1) out[1] = j1;
    double two_over_y = 2.0 / y;
    for (int k = 1; k < K; ++k) out[k + 1] = k * two_over_y * out[k] - out[k - 1];
    return;
  }
  miller(K, y, out);
}

double bessel_j(int k, double y) {
  check_window(k, y);
  if (y == 0.0) return k == 0 ? 1.0 : 0.0;
  if (y < kSeriesLimit) return series(k, y);
  std::vector<double> buf(k + 1);
  miller(k, y, buf.data());
  return buf[k];
}

double bessel_j_integral(int k, double y) {
  check_window(k, y);
  int n = static_cast<int>(y + k + 40.0 + 15.0 * std::cbrt(y + 1.0));
  double re = 0.0, im = 0.0;
  double step = 2.0 * std::numbers::pi / n;
  for (int j = 0; j < n; ++j) {
    double t = j * step;
    double phase = y * std::cos(t) - k * t;
    re += std::cos(phase);
    im += std::sin(phase);
  }
  re /= n;
  im /= n;
  // multiply by (-i)^k and keep the real part
  switch (k % 4) {
    case 0: return re;
    case 1: return im;
    case 2: return -re;
    default: return -im;
  }
}

double bessel_j_checked(int k, double y, double tol) {
  double a = bessel_j(k, y);
  double b = bessel_j_integral(k, y);
  double diff = std::abs(a - b);
  if (diff > tol) {
    throw AccuracyError("bessel paths disagree at k=" + std::to_string(k) + " y=" + std::to_string(y), diff);
  }
  return a;
}

void bessel_j_range_batch(int K, const double* y, std::size_t n, double* out) {
  std::vector<double> fast_y, j0, j1;
  std::vector<std::size_t> fast_idx;
  std::vector<double> tmp(K + 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (y[i] >= kAsymptoticMin && K <= 0.8 * y[i]) {
      double a, b;
      bessel_j01_asymptotic(y[i], a, b);
      fast_y.push_back(y[i]);
      j0.push_back(a);
      j1.push_back(b);
      fast_idx.push_back(i);
    } else {
      bessel_j_range(K, y[i], tmp.data());
      for (int k = 0; k <= K; ++k) out[k * n + i] = tmp[k];
    }
  }
  if (fast_idx.empty()) return;
  std::size_t m = fast_idx.size();
  std::vector<double> fast_out(static_cast<std::size_t>(K + 1) * m);
  simd::active().bessel_forward(fast_y.data(), j0.data(), j1.data(), K, fast_out.data(), m);
  for (std::size_t q = 0; q < m; ++q)
    for (int k = 0; k <= K; ++k) out[k * n + fast_idx[q]] = fast_out[k * m + q];
}

}  // namespace fbl
