#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "fbl/core/errors.hpp"
#include "fbl/specfun/bessel.hpp"
#include "fbl/specfun/bump.hpp"

using namespace fbl;

TEST_CASE("bessel at the origin") {
  CHECK(bessel_j(0, 0.0) == 1.0);
  CHECK(bessel_j(3, 0.0) == 0.0);
  CHECK(bessel_j_integral(0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("bessel J1(1) against the power series") {
  // sum_m (-1)^m (1/2)^{2m+1} / (m! (m+1)!)
  double series = 0.0, term = 0.5;
  for (int m = 0; m < 30; ++m) {
    series += term;
    term *= -0.25 / ((m + 1.0) * (m + 2.0));
  }
  CHECK(std::abs(series - 0.44005058574493351596) < 1e-16);
  CHECK(std::abs(bessel_j(1, 1.0) - 0.44005058574493351596) < 1e-14);
  CHECK(std::abs(bessel_j_integral(1, 1.0) - 0.44005058574493351596) < 1e-14);
}

TEST_CASE("bessel paths agree and satisfy the three-term recurrence") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> kd(0, 511);
  std::uniform_real_distribution<double> yd(0.0, 4096.0);
  double worst = 0.0, worst_rec = 0.0;
  for (int s = 0; s < 300; ++s) {
    int k = kd(rng);
    double y = s < 100 ? yd(rng) / 64.0 : yd(rng);
    worst = std::max(worst, std::abs(bessel_j(k, y) - bessel_j_integral(k, y)));
    if (y >= 0.1 && k >= 1 && k < 511) {
      double r = bessel_j(k - 1, y) + bessel_j(k + 1, y) - 2.0 * k / y * bessel_j(k, y);
      worst_rec = std::max(worst_rec, std::abs(r));
    }
  }
  CHECK(worst <= 1e-10);
  CHECK(worst_rec <= 1e-9);
}

TEST_CASE("bessel range and batch agree with single evaluations") {
  std::vector<double> ys = {0.5, 1.9, 2.0, 7.5, 24.9, 25.0, 80.0, 400.0, 1500.5, 4000.0};
  const int K = 16;
  std::vector<double> batch((K + 1) * ys.size());
  bessel_j_range_batch(K, ys.data(), ys.size(), batch.data());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    std::vector<double> row(K + 1);
    bessel_j_range(K, ys[i], row.data());
    for (int k = 0; k <= K; ++k) {
      double ref = bessel_j_integral(k, ys[i]);
      CHECK(std::abs(row[k] - ref) < 1e-12);
      CHECK(std::abs(batch[k * ys.size() + i] - ref) < 1e-12);
    }
  }
}

TEST_CASE("bessel domain and accuracy errors") {
  CHECK_THROWS_AS(bessel_j(513, 1.0), DomainError);
  CHECK_THROWS_AS(bessel_j(2, 5000.0), DomainError);
  CHECK_THROWS_AS(bessel_j(-1, 1.0), DomainError);
  CHECK_NOTHROW(bessel_j_checked(10, 100.0));
  CHECK_THROWS_AS(bessel_j_checked(10, 100.0, 0.0), AccuracyError);
}

TEST_CASE("bump plateau, support and symbol") {
  CHECK(bump_beta(0.75) == 1.0);
  CHECK(bump_beta(0.5) == 1.0);
  CHECK(bump_beta(1.0) == 1.0);
  CHECK(bump_beta(3.0) == 0.0);
  CHECK(bump_beta(0.25) == 0.0);
  CHECK(bump_beta(0.1) == 0.0);
  CHECK(symbol_alpha(0.75) == 0.75);
  CHECK(symbol_alpha(2.5) == 0.0);
  for (double t = 0.0; t <= 2.2; t += 0.001) {
    CHECK(bump_beta(t) >= 0.0);
    CHECK(bump_beta(t) <= 1.0);
  }
}

TEST_CASE("bump derivatives up to order four stay bounded under refinement") {
  // fourth finite differences at two step sizes: bounded and consistent
  auto d4 = [](double x, double h) {
    return (bump_beta(x + 2 * h) - 4 * bump_beta(x + h) + 6 * bump_beta(x) - 4 * bump_beta(x - h) +
            bump_beta(x - 2 * h)) /
           (h * h * h * h);
  };
  double m1 = 0.0, m2 = 0.0;
  for (double x = 0.2; x <= 2.05; x += 0.0007) {
    m1 = std::max(m1, std::abs(d4(x, 2e-3)));
    m2 = std::max(m2, std::abs(d4(x, 1e-3)));
  }
  CHECK(std::isfinite(m1));
  CHECK(m2 < 1e6);
  CHECK(std::abs(m1 - m2) / m2 < 0.05);
}

TEST_CASE("hat alpha values against adaptive quadrature") {
  const auto& t = hat_alpha_table();
  CHECK(std::abs(hat_alpha(0.0).value - std::complex<double>(1.0673056453926947896, 0.0)) < 1e-12);
  struct P {
    double m, re, im;
  };
  P probes[] = {{0.37, 0.976530448029219914, -0.410268058619741422},
                {3.3, -0.492766147726460903, 0.243187342225195639},
                {50.0, -0.000238749464038076689, 0.0000457475220961846141},
                {123.456, 2.18299157313003925e-6, 0.0000108312973514989108}};
  for (const auto& p : probes) {
    CHECK(std::abs(hat_alpha(p.m).value - std::complex<double>(p.re, p.im)) < 1e-9);
    CHECK(std::abs(hat_alpha_direct(p.m) - std::complex<double>(p.re, p.im)) < 1e-12);
  }
  CHECK(t.decay_constant(4) > 0.0);
}

TEST_CASE("hat alpha Hermitian symmetry and tail flag") {
  for (double m : {0.01, 0.7, 13.25, 333.3, 2047.9}) {
    auto a = hat_alpha(m).value, b = hat_alpha(-m).value;
    CHECK(std::abs(b - std::conj(a)) < 1e-15);
  }
  auto far = hat_alpha(1e5);
  CHECK(far.tail);
  CHECK(std::abs(far.value) > 0.0);
}

TEST_CASE("hat alpha interpolation error at off-grid probes") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> md(-600.0, 600.0);
  double worst = 0.0;
  for (int s = 0; s < 200; ++s) {
    double m = md(rng);
    worst = std::max(worst, std::abs(hat_alpha(m).value - hat_alpha_direct(m)));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("hat alpha decay certificate") {
  const auto& t = hat_alpha_table();
  for (int N : {2, 4, 6}) {
    double c = t.decay_constant(N);
    CHECK(std::isfinite(c));
    for (double m : {50.0, 200.0, 1000.0}) CHECK(std::abs(hat_alpha(m).value) <= t.envelope(m, N) * (1 + 1e-12));
  }
  CHECK(std::abs(hat_alpha(50.0).value) <= t.decay_constant(4) * std::pow(1.0 + 2500.0, -2.0));
}
