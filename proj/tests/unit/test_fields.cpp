#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <string>

#include "doctest.h"
#include "fbl/core/errors.hpp"
#include "fbl/fields/cartesian.hpp"
#include "fbl/fields/data.hpp"
#include "fbl/fields/field.hpp"
#include "fbl/fields/hankel.hpp"
#include "fbl/fields/io.hpp"
#include "fbl/fields/radial_grid.hpp"
#include "fbl/fields/sobolev.hpp"
#include "fbl/specfun/bump.hpp"

using namespace fbl;

namespace {

AngularSpectrumField gaussian(const RadialGrid& g, int k_max, int k = 0) {
  return single_harmonic(g, k_max, k, [](double r) { return cplx(std::exp(-0.5 * r * r)); });
}

}  // namespace

TEST_CASE("radial grid quadrature and interpolation") {
  RadialGrid g(32.0, 256);
  double s = 0.0, s1 = 0.0;
  for (int j = 0; j < g.n_r; ++j) {
    s += g.weights_r[j];
    s1 += g.weights[j] * std::cos(g.nodes[j]);
  }
  CHECK(s == doctest::Approx(512.0).epsilon(1e-13));
  CHECK(s1 == doctest::Approx(std::sin(32.0)).epsilon(1e-12));
  std::vector<cplx> v(g.n_r);
  for (int j = 0; j < g.n_r; ++j) v[j] = std::sin(0.7 * g.nodes[j]);
  for (double r : {0.01, 1.3, 17.77, 31.99}) CHECK(std::abs(g.interpolate(v.data(), r) - std::sin(0.7 * r)) < 1e-12);
  CHECK(g.interpolate(v.data(), 40.0) == cplx(0.0));
}

TEST_CASE("single harmonic norms and point values") {
  RadialGrid g(32.0, 256);
  auto f = gaussian(g, 4, 2);
  CHECK(f.l2_norm() == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
  cplx v = f.value(1.5, 0.3);
  CHECK(std::abs(v - std::exp(-1.125) * std::polar(1.0, 0.6)) < 1e-12);
  CHECK(f.reality_defect() > 0.1);
  auto z = f;
  z -= f;
  CHECK(z.l2_norm() == 0.0);
}

TEST_CASE("hankel transform of a gaussian") {
  RadialGrid g(32.0, 256);
  auto f = gaussian(g, 0);
  RhoGrid rho(0.0, 4.0, 16);
  auto h = hankel_forward(f, rho);
  for (int i = 0; i < rho.size(); ++i) CHECK(std::abs(h.at(0, i) - std::exp(-0.5 * rho.nodes[i] * rho.nodes[i])) < 1e-12);
}

TEST_CASE("hankel pair round trip and Parseval on band data") {
  RadialGrid g(256.0, 2048);
  BandDatum d({.k_max = 6, .seed = 3});
  auto spec = d.spectrum(g.r_max);
  auto f = hankel_inverse(spec, g);
  CHECK(f.reality_defect() < 1e-12);
  CHECK(f.l2_norm() == doctest::Approx(spec.l2_norm()).epsilon(1e-10));
  auto back = hankel_forward(f, spec.rho);
  double err = 0.0, ref = 0.0;
  for (std::size_t i = 0; i < spec.h.size(); ++i) {
    err = std::max(err, std::abs(back.h[i] - spec.h[i]));
    ref = std::max(ref, std::abs(spec.h[i]));
  }
  CHECK(err < 1e-8 * ref);
}

TEST_CASE("cartesian synthesis and polar analysis round trip") {
  RadialGrid g(32.0, 256);
  AngularSpectrumField f(g, 4);
  for (int k = -4; k <= 4; ++k)
    for (int j = 0; j < g.n_r; ++j) {
      double r = g.nodes[j];
      f.at(k, j) = std::pow(r, std::abs(k)) * std::exp(-0.125 * r * r) * cplx(1.0 + 0.1 * k, 0.05 * k * k);
    }
  CartesianGrid cg{256, 0.25};
  auto c = synthesize(f, cg);
  CHECK(c.l2_norm() == doctest::Approx(f.l2_norm()).epsilon(1e-10));
  AnalyzeDiagnostics diag;
  RadialGrid inner(24.0, 192);
  auto back = analyze(c, inner, 4, {.order = 8, .upsample = 2}, &diag);
  AngularSpectrumField ref(inner, 4);
  for (int k = -4; k <= 4; ++k)
    for (int j = 0; j < inner.n_r; ++j) ref.at(k, j) = g.interpolate(f.channel(k), inner.nodes[j]);
  CHECK(relative_distance(back, ref) < 1e-6);
  CHECK_FALSE(diag.truncation_warning);
  c.at(0, 0) = NAN;
  CHECK_THROWS_AS(analyze(c, inner, 4), DomainError);
}

TEST_CASE("analysis flags mass at the boundary") {
  RadialGrid g(64.0, 512);
  BandDatum d({.k_max = 2, .seed = 5});
  CartesianGrid cg{128, 0.5};
  AnalyzeDiagnostics diag;
  analyze(synthesize(d.field(g), cg), RadialGrid(24.0, 192), 2, {}, &diag);
  CHECK(diag.truncation_warning);
}

TEST_CASE("cartesian spectrum round trip") {
  CartesianGrid cg{64, 0.5};
  CartesianField c(cg);
  std::mt19937_64 rng(1);
  std::normal_distribution<double> nd;
  for (auto& v : c.v) v = cplx(nd(rng), nd(rng));
  auto back = from_cartesian_spectrum(cartesian_spectrum(c), cg);
  double err = 0.0;
  for (std::size_t i = 0; i < c.v.size(); ++i) err = std::max(err, std::abs(back.v[i] - c.v[i]));
  CHECK(err < 1e-12);
}

TEST_CASE("band limiting") {
  RadialGrid g(256.0, 2048);
  BandDatum d({.k_max = 3, .seed = 8});
  auto f = d.field(g);
  auto same = band_limit(f, 0.5, 1.0);
  CHECK(relative_distance(same, f) < 1e-8);
  CHECK(spectral_mass_outside(same, 0.5, 1.0, 2.0) < 1e-8);

  RadialGrid fine(128.0, 2048);
  BandDatum far({.lo = 4.0, .hi = 8.0, .k_max = 2, .seed = 8});
  auto high = far.field(fine);
  auto none = band_limit(high, 0.5, 1.0);
  CHECK(none.l2_norm() < 1e-4 * high.l2_norm());
  CHECK_THROWS_AS(band_limit(f, 0.5, 8.0), ResolutionError);
  CHECK_THROWS_AS(band_limit(f, 1.0, 0.5), DomainError);
}

TEST_CASE("spectral mass split reproduces the L2 norm") {
  RadialGrid g(32.0, 512);
  auto f = gaussian(g, 2, 0);
  auto m = spectral_mass_split(f, 0.5, 1.0, 12.0);
  double total = f.l2_norm() * f.l2_norm();
  CHECK(m.inside + m.outside == doctest::Approx(total).epsilon(1e-6));
  CHECK(m.inside == doctest::Approx(std::numbers::pi * (std::exp(-0.25) - std::exp(-1.0))).epsilon(1e-6));
}

TEST_CASE("sobolev norms of a gaussian") {
  RadialGrid g(32.0, 256);
  auto f = gaussian(g, 0);
  CartesianGrid cg{256, 0.25};
  for (double s : {0.0, 1.0, 2.0}) {
    double hom = sobolev_norm(f, {.s = s, .homogeneous = true}, cg);
    CHECK(hom == doctest::Approx(std::sqrt(std::numbers::pi * std::tgamma(s + 1.0))).epsilon(1e-10));
  }
  double half = sobolev_norm(f, {.s = 0.5, .homogeneous = true}, cg);
  CHECK(half == doctest::Approx(std::sqrt(std::numbers::pi * std::tgamma(1.5))).epsilon(1e-4));
  double prev = 0.0;
  for (double s : {-1.0, -0.5, 0.0, 0.5, 1.0, 1.5}) {
    double v = sobolev_norm(f, {.s = s}, cg);
    CHECK(v > prev);
    prev = v;
  }
  CHECK_THROWS_AS(sobolev_norm(f, {.s = -1.0, .homogeneous = true}, cg), DivergenceError);
  auto f2 = gaussian(g, 2, 2);
  double plain = sobolev_norm(f2, {.s = 0.0}, cg);
  double ang = sobolev_norm(f2, {.s = 0.0, .b = 1.0}, cg);
  CHECK(ang == doctest::Approx(std::sqrt(5.0) * plain).epsilon(1e-12));
}

TEST_CASE("band spectrum sobolev matches the cartesian route") {
  RadialGrid g(128.0, 1024);
  BandDatum d({.k_max = 3, .seed = 9});
  auto spec = d.spectrum(g.r_max);
  auto f = d.field(g);
  CartesianGrid cg{512, 0.5};
  for (double s : {0.0, 0.6, -0.4}) {
    double a = sobolev_norm(spec, {.s = s});
    double b = sobolev_norm(f, {.s = s}, cg);
    CHECK(a == doctest::Approx(b).epsilon(1e-5));
  }
  double hom = sobolev_norm(spec, {.s = 0.4, .homogeneous = true});
  CHECK(hom < sobolev_norm(spec, {.s = 0.0}));
}

TEST_CASE("band datum dilation and reality") {
  BandDatum d({.seed = 2});
  auto e = d.dilated(2.0);
  CHECK(e.lo() == 1.0);
  CHECK(e.hi() == 2.0);
  CHECK(std::abs(e.eval(3, 1.5) - 0.25 * d.eval(3, 0.75)) < 1e-15);
  CHECK(std::abs(d.eval(-3, 0.7) - std::conj(d.eval(3, 0.7))) == 0.0);
  CHECK(d.eval(1, 0.4) == cplx(0.0));
  CHECK(BandDatum({.radial = true}).k_max() == 0);
}

TEST_CASE("snapshot and csv output") {
  RadialGrid g(16.0, 64);
  BandDatum d({.k_max = 2, .seed = 4});
  auto f = d.field(g);
  std::string path = "fbl_test_snapshot.bin";
  write_snapshot(f, path);
  auto r = read_snapshot(path);
  CHECK(r.grid == f.grid);
  CHECK(r.k_max == f.k_max);
  CHECK(r.coeffs == f.coeffs);
  std::remove(path.c_str());
  std::string csv = "fbl_test_field.csv";
  write_field_csv(f, csv);
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "# schema=fbl.field.v1");
  in.close();
  std::remove(csv.c_str());
  CHECK_THROWS(read_snapshot("does_not_exist.bin"));
}
