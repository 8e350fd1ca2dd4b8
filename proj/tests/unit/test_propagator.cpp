#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fbl/core/errors.hpp"
#include "fbl/fields/data.hpp"
#include "fbl/propagator/kernel_form.hpp"
#include "fbl/propagator/propagate.hpp"

using namespace fbl;

namespace {

const RadialGrid& grid() {
  static const RadialGrid g(256.0, 2048);
  return g;
}

double theta_l2_sq(const AngularSpectrumField& f, double r) {
  double s = 0.0;
  for (int k = -f.k_max; k <= f.k_max; ++k) s += std::norm(f.grid.interpolate(f.channel(k), r));
  return 2.0 * std::numbers::pi * s;
}

}  // namespace

TEST_CASE("identity at t = 0 and unitarity") {
  BandDatum d({.k_max = 6, .seed = 21});
  auto f = d.field(grid());
  PropagationPlan p{f, {0.0, 4.0, 16.0, 64.0}};
  auto out = propagate(p);
  REQUIRE(out.size() == 4);
  CHECK(relative_distance(out[0], f) < 1e-8);
  for (const auto& u : out) CHECK(std::abs(u.l2_norm() / f.l2_norm() - 1.0) < 1e-6);
  CHECK(out[0].reality_defect() < 1e-10 * f.l2_norm());
}

TEST_CASE("fourier bessel and cartesian routes agree") {
  BandDatum d({.radial = true, .seed = 2});
  PropagationPlan p{d.field(grid()), {10.0}};
  CHECK(compare_routes(p, Route::fourier_bessel, Route::cartesian_fft, 1e-4) < 1e-4);
  BandDatum e({.k_max = 5, .seed = 3});
  PropagationPlan q{e.field(grid()), {10.0}};
  CHECK(compare_routes(q, Route::fourier_bessel, Route::cartesian_fft, 1e-4) < 1e-4);
}

TEST_CASE("time composition") {
  BandDatum d({.k_max = 4, .seed = 5});
  auto f = d.field(grid());
  auto a = propagate({f, {7.0}});
  auto b = propagate({a[0], {5.0}});
  auto c = propagate({f, {12.0}});
  CHECK(relative_distance(b[0], c[0]) < 2e-8);
}

TEST_CASE("scaling covariance") {
  BandDatum d({.k_max = 3, .seed = 6});
  double lambda = 2.0, t = 6.0;
  auto u = propagate_spectrum(d.spectrum(grid().r_max + 20.0), lambda * t, grid());
  auto v = propagate_spectrum(d.dilated(lambda).spectrum(grid().r_max + 20.0), t, grid());
  double worst = 0.0, ref = 0.0;
  for (double r : {1.0, 3.5, 8.0, 20.0, 40.0}) {
    for (int k = -3; k <= 3; ++k) {
      cplx a = grid().interpolate(v.channel(k), r);
      cplx b = grid().interpolate(u.channel(k), lambda * r);
      worst = std::max(worst, std::abs(a - b));
      ref = std::max(ref, std::abs(b));
    }
  }
  CHECK(worst < 1e-9 * ref);
}

TEST_CASE("light cone exit is reported") {
  BandDatum d({.k_max = 2, .seed = 7});
  RadialGrid small(128.0, 1024);
  PropagationPlan p{d.field(small), {100.0}};
  try {
    propagate(p);
    FAIL("expected truncation");
  } catch (const TruncationError& e) {
    CHECK(e.needed_extent > 128.0);
  }
  CHECK_THROWS_AS(propagate({d.field(small), {3.0, 1.0}}), ConfigError);
  CHECK(parse_route("cartesian_fft") == Route::cartesian_fft);
  CHECK_THROWS_AS(parse_route("spline"), ConfigError);
}

TEST_CASE("kernel form identity") {
  BandDatum d({.k_max = 8, .seed = 1});
  auto spec = d.spectrum(600.0);
  AngularSpectrumField zero(RadialGrid(32.0, 256), 2);
  for (double v : kernel_form_evaluate(zero, 1.0, 2.0)) CHECK(v == 0.0);

  auto terms = kernel_form_evaluate(spec, 8.0, 8.0);
  double sum = 0.0;
  for (double v : terms) sum += v;
  auto u = propagate_spectrum(d.spectrum(grid().r_max + 8.0), 8.0, grid());
  CHECK(sum == doctest::Approx(theta_l2_sq(u, 8.0)).epsilon(1e-3));

  BandDatum radial({.radial = true, .seed = 4});
  auto rt = kernel_form_evaluate(radial.spectrum(600.0), 3.0, 5.0);
  REQUIRE(rt.size() == 1);
  CHECK(rt[0] > 0.0);

  auto gauss = single_harmonic(RadialGrid(32.0, 256), 0, 0, [](double r) { return cplx(std::exp(-0.5 * r * r)); });
  CHECK_THROWS_AS(kernel_form_evaluate(gauss, 1.0, 1.0), DomainError);
}

TEST_CASE("kernel form route reproduces the propagator") {
  RadialGrid g(176.0, 352);
  BandDatum d({.k_max = 2, .seed = 12});
  auto f = d.field(g);
  auto fb = propagate({f, {3.0}});
  PropagationPlan p{f, {3.0}, Route::kernel_form};
  p.kernel_s_max = 160.0;
  auto kf = propagate(p);
  double num = 0.0, den = 0.0;
  for (int j = 0; j < g.n_r; ++j) {
    num += g.weights_r[j] * (theta_l2_sq(kf[0], g.nodes[j]) - theta_l2_sq(fb[0], g.nodes[j]));
    den += g.weights_r[j] * theta_l2_sq(fb[0], g.nodes[j]);
  }
  CHECK(std::abs(num) < 1e-3 * den);
  CHECK(relative_distance(kf[0], fb[0]) < 1e-3);
}
