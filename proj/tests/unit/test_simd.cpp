#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "fbl/simd/kernels.hpp"
#include "fbl/specfun/bump.hpp"

using namespace fbl;
using simd::cplx;

namespace {

struct Data {
  std::vector<double> w, x;
  std::vector<cplx> z, y;
};

Data make(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Data d;
  for (std::size_t i = 0; i < n; ++i) {
    d.w.push_back(u(rng));
    d.x.push_back(u(rng));
    d.z.emplace_back(u(rng), u(rng));
    d.y.emplace_back(u(rng), u(rng));
  }
  return d;
}

double maxdiff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double e = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
  return e;
}

}  // namespace

TEST_CASE("avx2 kernels match the scalar reference") {
  const simd::Kernels* v = simd::avx2_kernels();
  if (!v) return;
  const simd::Kernels& s = simd::scalar_kernels();
  for (std::size_t n : {1u, 3u, 4u, 7u, 64u, 1001u}) {
    Data d = make(n, static_cast<unsigned>(n));
    CHECK(std::abs(s.rdot(d.w.data(), d.z.data(), n) - v->rdot(d.w.data(), d.z.data(), n)) < 1e-12);
    CHECK(std::abs(s.wnorm2(d.w.data(), d.z.data(), n) - v->wnorm2(d.w.data(), d.z.data(), n)) < 1e-12);

    auto y1 = d.y, y2 = d.y;
    s.axpy(cplx(0.3, -1.2), d.x.data(), y1.data(), n);
    v->axpy(cplx(0.3, -1.2), d.x.data(), y2.data(), n);
    CHECK(maxdiff(y1, y2) < 1e-15);

    std::vector<double> a1(n, 1.0), a2(n, 1.0);
    s.accum_abs2(d.z.data(), a1.data(), n);
    v->accum_abs2(d.z.data(), a2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(a1[i] == doctest::Approx(a2[i]).epsilon(1e-15));

    for (int p : {1, 2, 3, 5}) {
      std::vector<double> o1(n), o2(n);
      s.scaled_power(d.x.data(), 1.7, p, o1.data(), n);
      v->scaled_power(d.x.data(), 1.7, p, o2.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(o1[i] - o2[i]) < 1e-15);
    }

    std::vector<double> c(n), sk(n), ks(n);
    for (std::size_t i = 0; i < n; ++i) {
      double xi = 2.0 + d.x[i], tau = 0.1;
      c[i] = std::cos(xi * tau);
      sk[i] = std::sin(xi * tau) / xi;
      ks[i] = xi * std::sin(xi * tau);
    }
    std::vector<cplx> u1(n), v1(n), u2(n), v2(n);
    s.wave_rotate(c.data(), sk.data(), ks.data(), d.z.data(), d.y.data(), u1.data(), v1.data(), n);
    v->wave_rotate(c.data(), sk.data(), ks.data(), d.z.data(), d.y.data(), u2.data(), v2.data(), n);
    CHECK(maxdiff(u1, u2) < 1e-15);
    CHECK(maxdiff(v1, v2) < 1e-15);

    std::vector<double> y(n), j0(n), j1(n);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = 40.0 + 10.0 * d.x[i];
      j0[i] = std::cyl_bessel_j(0.0, y[i]);
      j1[i] = std::cyl_bessel_j(1.0, y[i]);
    }
    int K = 20;
    std::vector<double> b1((K + 1) * n), b2((K + 1) * n);
    s.bessel_forward(y.data(), j0.data(), j1.data(), K, b1.data(), n);
    v->bessel_forward(y.data(), j0.data(), j1.data(), K, b2.data(), n);
    for (std::size_t i = 0; i < b1.size(); ++i) CHECK(std::abs(b1[i] - b2[i]) < 1e-14);
  }
}

TEST_CASE("avx2 lagrange interpolation matches the scalar reference") {
  const simd::Kernels* v = simd::avx2_kernels();
  if (!v) return;
  const auto& t = hat_alpha_table();
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-4200.0, 4200.0);
  std::vector<double> m(2000);
  for (auto& x : m) x = u(rng);
  m[0] = 0.0;
  m[1] = 1e-3;
  m[2] = t.m_max();
  std::vector<cplx> o1(m.size()), o2(m.size());
  auto n1 = simd::scalar_kernels().lagrange6(t.table().data(), t.table().size(), t.h_m(), m.data(), o1.data(), m.size());
  auto n2 = v->lagrange6(t.table().data(), t.table().size(), t.h_m(), m.data(), o2.data(), m.size());
  CHECK(n1 == n2);
  CHECK(n1 > 0);
  CHECK(maxdiff(o1, o2) < 1e-15);
}
