#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "fbl/core/errors.hpp"
#include "fbl/core/quadrature.hpp"
#include "fbl/kernel/certify.hpp"
#include "fbl/kernel/envelope.hpp"
#include "fbl/kernel/keystep.hpp"
#include "fbl/kernel/psi.hpp"
#include "fbl/specfun/bessel.hpp"
#include "fbl/specfun/bump.hpp"

using namespace fbl;

namespace {

// 2 pi i^k int alpha(rho) J_k(r rho) e^{-i m rho} d rho
cplx psi_bessel_form(int k, double m, double r) {
  Rule rule = composite_gauss(0.25, 2.0, 28, 24);
  cplx s = 0.0;
  for (std::size_t i = 0; i < rule.x.size(); ++i) {
    double p = rule.x[i];
    s += rule.w[i] * symbol_alpha(p) * bessel_j(k, r * p) * std::polar(1.0, -m * p);
  }
  cplx ik = std::pow(cplx(0.0, 1.0), k);
  return 2.0 * std::numbers::pi * ik * s;
}

}  // namespace

TEST_CASE("psi at the origin") {
  for (double m : {0.0, 0.37, -3.3, 50.0}) {
    auto v = psi(0, m, 0.0);
    CHECK(std::abs(v.value - 2.0 * std::numbers::pi * hat_alpha(m).value) < 1e-12);
    for (int k : {1, 2, 7, -3}) CHECK(std::abs(psi(k, m, 0.0).value) < 1e-12);
  }
}

TEST_CASE("psi against a high-precision oracle") {
  auto v = psi(5, 3.0, 4.0);
  CHECK(std::abs(v.value - cplx(-0.673430106919966427, -0.685040055668282465)) < 1e-9);
  CHECK(v.error < 1e-9);
}

TEST_CASE("psi agrees with the Bessel representation") {
  struct P { int k; double m, r; };
  for (P p : {P{0, 1.0, 2.0}, P{3, -7.5, 12.0}, P{20, 50.0, 60.0}, P{64, 100.0, 90.0}, P{1, 300.0, 256.0}}) {
    auto v = psi(p.k, p.m, p.r);
    CHECK(std::abs(v.value - psi_bessel_form(p.k, p.m, p.r)) < 1e-9);
  }
}

TEST_CASE("psi symmetry in k and in m") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> kd(0, 64);
  std::uniform_real_distribution<double> md(-600.0, 600.0), rd(0.0, 512.0);
  double worst = 0.0, worst_m = 0.0;
  for (int s = 0; s < 200; ++s) {
    int k = kd(rng);
    double m = md(rng), r = rd(rng);
    int n = psi_nodes(k, r);
    worst = std::max(worst, std::abs(psi_direct(k, m, r, n) - psi_direct(-k, m, r, n)));
    cplx a = psi_direct(k, m, r, n), b = psi_direct(k, -m, r, n);
    double sign = k % 2 ? -1.0 : 1.0;
    worst_m = std::max(worst_m, std::abs(b - sign * std::conj(a)));
  }
  CHECK(worst < 1e-9);
  CHECK(worst_m < 1e-9);
}

TEST_CASE("psi all orders matches single evaluations and stays bounded") {
  std::vector<cplx> v(33);
  psi_all_orders(32, 40.0, 45.0, v.data());
  double cap = 2.0 * std::numbers::pi * hat_alpha_table().max_abs();
  for (int k = 0; k <= 32; k += 4) {
    CHECK(std::abs(v[k] - psi(k, 40.0, 45.0).value) < 1e-10);
    CHECK(std::abs(v[k]) <= cap * (1.0 + 1e-12));
  }
}

TEST_CASE("psi domain") {
  CHECK_THROWS_AS(psi(0, 1e6, 1.0), DomainError);
  CHECK_THROWS_AS(psi(0, 1.0, -1.0), DomainError);
}

TEST_CASE("envelope regimes") {
  auto a = envelope(0, 10.0, 0.5);
  CHECK(a.regime == Regime::small_r_or_large_m);
  CHECK(a.bound_value == doctest::Approx(1.0 / 101.0 / 101.0).epsilon(1e-14));
  auto b = envelope(3, 30.0, 100.0);
  CHECK(b.regime == Regime::bulk);
  CHECK(b.bound_value == doctest::Approx(0.01).epsilon(1e-14));
  auto c = envelope(3, 99.5, 100.0);
  CHECK(c.regime == Regime::near_light_cone);
  double ex = std::pow(1.0 + 199.5 * 199.5, -2.0) + 0.1 * std::pow(1.25, -2.0);
  CHECK(c.bound_value == doctest::Approx(ex).epsilon(1e-14));
  auto d0 = envelope(0, 60.0, 100.0);
  CHECK(d0.regime == Regime::inside_cone);
  CHECK(d0.d == doctest::Approx(80.0).epsilon(1e-14));
  CHECK(std::cos(d0.theta0) == doctest::Approx(0.6).epsilon(1e-14));
  CHECK((100.0 / 80.0) * std::sin(d0.theta1) == doctest::Approx(0.5).epsilon(1e-14));
  double gap = std::sqrt(1.0 + 1600.0);
  double base = std::pow(1.0 + 160.0 * 160.0, -2.0) + 0.1 * std::pow(gap, -1.5);
  CHECK(d0.bound_value == doctest::Approx(base).epsilon(1e-14));
  auto d40 = envelope(40, 60.0, 100.0);
  CHECK(d40.bound_value == doctest::Approx(base + 0.1 / std::sqrt(gap) * 0.5).epsilon(1e-14));
  CHECK(envelope(-40, -60.0, 100.0).bound_value == d40.bound_value);
  CHECK(envelope(0, 0.0, 0.0).bound_value == 1.0);
}

TEST_CASE("phi properties") {
  auto c = phi_properties_check(0.0, 2.0);
  CHECK(c.passed);
  CHECK(c.d == doctest::Approx(2.0));
  CHECK(c.beta_lo < 0.0);
  CHECK(c.beta_hi > 0.0);
  CHECK(c.min_slope_slack >= -1e-9);
  CHECK(c.min_growth_slack < 1e-3);
  CHECK(c.min_lower_slack < 1e-3);
  for (double m : {0.0, 3.0, 50.0, 400.0})
    for (double gap : {1.0, 2.0, 10.0, 100.0}) CHECK(phi_properties_check(m, m + gap).passed);
  CHECK_THROWS_AS(phi_properties_check(1.0, 1.5), DomainError);
  CHECK_THROWS_AS(phi_properties_check(-1.0, 4.0), DomainError);
}

TEST_CASE("keystep at the origin") {
  double s = 0.0;
  double h = 1.0 / 16.0;
  for (double m = -256.0; m <= 256.0 + 1e-9; m += h) {
    double w = (std::abs(std::abs(m) - 256.0) < 1e-9) ? 0.5 * h : h;
    s += w * std::norm(2.0 * std::numbers::pi * hat_alpha(m).value) * std::sqrt(1.0 + m * m);
  }
  auto v = keystep_norm(0, 0.0);
  CHECK(v.head == doctest::Approx(std::sqrt(s)).epsilon(1e-9));
  CHECK(keystep_norm(3, 0.0).head < 1e-10);
}

TEST_CASE("keystep against a brute-force oracle") {
  auto v = keystep_norm(8, 128.0);
  CHECK(v.head == doctest::Approx(8.50925948792082).epsilon(1e-9));
  CHECK(v.tail < 0.01 * v.head);
  CHECK(v.upper >= v.head);
  auto w = keystep_norm(-8, 128.0);
  CHECK(w.head == v.head);
  CHECK(w.tail == v.tail);
  CHECK(keystep_norm(8, 128.0, 0.25).head < v.head);
}

TEST_CASE("envelope certification") {
  auto one = certify_envelope_points({0}, {0.0}, {0.0});
  CHECK(one.c_star == doctest::Approx(2.0 * std::numbers::pi * std::abs(hat_alpha(0.0).value)).epsilon(1e-12));
  auto c = certify_envelopes(EnvelopeGrid::dyadic(16, -2, 6));
  CHECK(std::isfinite(c.c_star));
  CHECK(c.refinement_delta <= 0.005);
  CHECK(c.argmax.ratio == c.c_star);
  double regime_top = *std::max_element(c.regime_max, c.regime_max + 4);
  CHECK(regime_top == c.c_star);
}

TEST_CASE("keystep certification") {
  KeystepGrid g = KeystepGrid::dyadic(32, 0, 6);
  auto c = certify_keystep(g);
  CHECK(std::isfinite(c.sup[0]));
  CHECK(c.sup[1] <= c.sup[0]);
  CHECK(c.sup[2] <= c.sup[1]);
  CHECK(c.refinement_delta <= 0.005);
  CHECK(c.last_over_median <= 1.2);
}
