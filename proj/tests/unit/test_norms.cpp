#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fbl/core/errors.hpp"
#include "fbl/fields/data.hpp"
#include "fbl/norms/dyadic.hpp"
#include "fbl/norms/inequalities.hpp"
#include "fbl/norms/mixed.hpp"
#include "fbl/norms/strichartz.hpp"
#include "fbl/semilinear/solver.hpp"

using namespace fbl;

namespace {

constexpr double kPi = std::numbers::pi;

AngularSpectrumField gaussian_field(const RadialGrid& g, int k_max, int k) {
  double peak = k == 0 ? 1.0 : std::pow(double(k), 0.5 * k) * std::exp(-0.5 * k);
  return single_harmonic(g, k_max, k, [&](double r) { return std::pow(r, k) * std::exp(-0.5 * r * r) / peak; });
}

CartesianField cartesian_gaussian(const CartesianGrid& g, double w, double amp = 1.0) {
  CartesianField f(g);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) f.at(i, j) = amp * std::exp(-(g.x(i) * g.x(i) + g.x(j) * g.x(j)) / (2.0 * w * w));
  return f;
}

const SpaceTimeProfile& short_profile() {
  static const SpaceTimeProfile p = [] {
    ProfileOptions o;
    o.T_max = 64.0;
    o.r_exponents = {2.0, 6.0, 8.0};
    return space_time_profile(BandDatum({.k_max = 6, .seed = 3}), o);
  }();
  return p;
}

}  // namespace

TEST_CASE("trapezoid Lq norm of a constant") {
  std::vector<double> g(101, 2.0);
  CHECK(lq_trapezoid(g, 0.1, 2.0) == doctest::Approx(2.0 * std::sqrt(10.0)).epsilon(1e-12));
  CHECK(lq_trapezoid(g, 0.1, kInf) == doctest::Approx(2.0));
  CHECK(lq_trapezoid(g, 0.1, 4.0, 51) == doctest::Approx(2.0 * std::pow(5.0, 0.25)).epsilon(1e-12));
}

TEST_CASE("radial Lr norms of a Gaussian") {
  RadialGrid g(16.0, 256);
  auto f = gaussian_field(g, 2, 0);
  CHECK(radial_lr_norm(f, 2.0) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-10));
  CHECK(radial_lr_norm(f, 4.0) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-10));
  double node_max = 0.0;
  for (double r : g.nodes) node_max = std::max(node_max, std::exp(-0.5 * r * r));
  CHECK(radial_lr_norm(f, kInf) == doctest::Approx(std::sqrt(2.0 * kPi) * node_max).epsilon(1e-13));
}

TEST_CASE("mixed norm of stationary and zero samples") {
  RadialGrid g(16.0, 256);
  auto f = gaussian_field(g, 2, 1);
  std::vector<double> t;
  std::vector<AngularSpectrumField> u;
  for (int i = 0; i <= 40; ++i) {
    t.push_back(0.25 * i);
    u.push_back(f);
  }
  MixedNormSpec s{2.0, 2.0};
  CHECK(mixed_norm(u, t, s) == doctest::Approx(std::sqrt(10.0) * f.l2_norm()).epsilon(1e-10));
  s.T_window = 5.0;
  CHECK(mixed_norm(u, t, s) == doctest::Approx(std::sqrt(5.0) * f.l2_norm()).epsilon(1e-10));
  std::vector<AngularSpectrumField> z(t.size(), AngularSpectrumField(g, 2));
  CHECK(mixed_norm(z, t, {4.0, kInf}) == 0.0);
  CHECK_THROWS_AS(mixed_norm(u, t, {0.5, 2.0}), DomainError);
}

TEST_CASE("mixed norm against a brute force sum") {
  RadialGrid g(16.0, 256);
  std::vector<double> t;
  std::vector<AngularSpectrumField> u;
  for (int i = 0; i <= 20; ++i) {
    t.push_back(0.1 * i);
    double a = 1.0 + t.back();
    u.push_back(single_harmonic(g, 1, 1, [&](double r) { return r * std::exp(-r * r / (2.0 * a)); }));
  }
  // S(t, r) = 2 pi r^2 e^{-r^2/a} maximized over the radial nodes, then a
  // direct trapezoid sum in t
  double acc = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    double a = 1.0 + t[i], m = 0.0;
    for (double r : g.nodes) m = std::max(m, 2.0 * kPi * r * r * std::exp(-r * r / a));
    double w = (i == 0 || i + 1 == t.size()) ? 0.05 : 0.1;
    acc += w * std::pow(m, 1.5);
  }
  CHECK(mixed_norm(u, t, {3.0, kInf}) == doctest::Approx(std::cbrt(acc)).epsilon(1e-12));
  CHECK(mixed_norm(u, t, {3.0, kInf}) == doctest::Approx(2.7373).epsilon(1e-3));
}

TEST_CASE("dyadic log sum stays bounded") {
  auto c = dyadic_check({0.1, 0.25, 0.5, 1.0});
  CHECK(c.passed);
  CHECK(c.widening_change < 1e-12);
  for (std::size_t i = 0; i < c.deltas.size(); ++i) {
    CHECK(std::isfinite(c.sup_ratio[i]));
    CHECK(c.plateau[i] <= c.sup_ratio[i]);
  }
  CHECK(c.sup_ratio[0] > c.sup_ratio[3]);
  auto a = dyadic_log_sum(1024.0, 0.5);
  auto b = dyadic_log_sum(1024.0, 0.5, {-200, DyadicRange::standard(0.5).hi + 40});
  CHECK(a.sum == doctest::Approx(b.sum).epsilon(1e-13));
}

TEST_CASE("endpoint ratio is finite and homogeneous") {
  BandDatum d({.k_max = 6, .seed = 3});
  const auto& p = short_profile();
  auto r = strichartz_endpoint_ratio(d, p, 0.6, {4.0, 16.0, 64.0});
  REQUIRE(r.samples.size() == 3);
  for (const auto& s : r.samples) {
    CHECK(std::isfinite(s.ratio));
    CHECK(s.ratio > 0.0);
  }
  CHECK(r.samples[2].lhs > r.samples[0].lhs);
  ProfileOptions o;
  o.T_max = 16.0;
  auto a = strichartz_endpoint_ratio(d, 0.6, {16.0}, o);
  auto b = strichartz_endpoint_ratio(d.scaled(3.0), 0.6, {16.0}, o);
  CHECK(std::abs(a.sup_ratio / b.sup_ratio - 1.0) < 1e-10);
  CHECK_THROWS_AS(strichartz_endpoint_ratio(d, 0.5, {16.0}, o), DomainError);
  auto z = strichartz_endpoint_ratio(d.scaled(0.0), 0.6, {16.0}, o);
  CHECK(z.samples[0].skipped);
}

TEST_CASE("generalized ratios and the energy corner") {
  BandDatum d({.k_max = 6, .seed = 3});
  const auto& p = short_profile();
  auto e = generalized_ratio(d, p, kInf, 2.0);
  CHECK(e.sup_ratio == doctest::Approx(1.0).epsilon(1e-8));
  auto g = generalized_ratio(d, p, 6.0, 8.0);
  CHECK(std::isfinite(g.sup_ratio));
  CHECK(g.sup_ratio > 0.0);
  CHECK_THROWS_AS(generalized_ratio(d, p, 2.0, 4.0), DomainError);
  CHECK_THROWS_AS(generalized_ratio(d, p, 4.0, 5.0), DomainError);
  auto a = generalized_ratio(d, p, 4.0, kInf);
  ProfileOptions o;
  o.T_max = 64.0;
  auto h = strichartz_homogeneous_ratio(d, 4.0, o);
  CHECK(a.sup_ratio == doctest::Approx(h.sup_ratio).epsilon(1e-12));
}

TEST_CASE("dilation leaves the scale invariant ratio unchanged") {
  BandDatum d({.k_max = 4, .seed = 2});
  ProfileOptions o;
  o.T_max = 32.0;
  auto s = dilation_study(d, 4.0, kInf, {0.5, 1.0, 2.0}, o);
  REQUIRE(s.ratios.size() == 3);
  CHECK(s.spread < 0.02);
}

TEST_CASE("interpolation constant of a Gaussian") {
  CHECK(interp_factor(0.5) == doctest::Approx(1.0));
  CHECK(interp_factor(0.25) == doctest::Approx(std::pow(3.0, 0.375)));
  CHECK_THROWS_AS(interp_factor(1.0), DomainError);
  CartesianGrid g{256, 0.1};
  auto s = interp_sample(cartesian_gaussian(g, 1.0), 0.5);
  CHECK(s.lhs == doctest::Approx(1.0));
  double c = 1.0 / (std::pow(2.0 * kPi, 0.25) * std::pow(kPi, 0.25));
  CHECK(std::abs(s.c_emp - c) < 1e-6);
  CHECK_THROWS_AS(interp_sample(cartesian_gaussian(g, 0.08), 0.9), ResolutionError);
}

TEST_CASE("interpolation bound over a small family") {
  auto r = interp_bound_check({0.25, 0.5, 0.95}, 6, 11, {160, 0.2});
  CHECK(r.samples.size() == 18);
  CHECK(r.passed);
  CHECK(r.refinement_change < 0.05);
  for (const auto& s : r.samples) CHECK(s.c_emp > 0.0);
  auto a = interp_family_member(11, 2, {64, 0.25});
  auto b = interp_family_member(11, 2, {64, 0.25});
  CHECK(a.v == b.v);
}

TEST_CASE("growth bound along a linear wave") {
  CartesianGrid g{256, 0.25};
  auto u0 = cartesian_gaussian(g, 1.0);
  auto u1 = cartesian_gaussian(g, 1.0, 0.5);
  std::vector<double> t;
  std::vector<CartesianField> u, ut;
  for (int i = 0; i <= 16; ++i) {
    t.push_back(0.5 * i);
    auto [a, b] = linear_wave(u0, u1, t.back());
    u.push_back(a);
    ut.push_back(b);
  }
  auto r = growth_bound_check(t, u, ut, 0.5, 2.0);
  CHECK(r.passed);
  CHECK(r.min_l2_slack >= 0.0);
  CHECK(r.c_emp_max > 0.0);
  CHECK(r.c_emp_max < 1.0);
  CHECK_THROWS_AS(growth_bound_check(t, u, ut, 0.75, 2.0), DomainError);
}

TEST_CASE("radial transform and mass of the Gaussian mollifier") {
  auto p = RadialProfile::gaussian(0.5);
  CHECK(radial_l1(p) == doctest::Approx(1.0).epsilon(1e-12));
  for (double xi : {0.0, 1.0, 3.0, 7.5}) CHECK(std::abs(radial_transform(p, xi) - p.hat(xi)) < 1e-12);
  auto q = p.scaled(2.0);
  CHECK(radial_l1(q) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(q.hat(2.0) == doctest::Approx(p.hat(1.0)));
}

TEST_CASE("convolution bound against the Hankel route") {
  RadialGrid rg(16.0, 256);
  CartesianGrid cg{256, 0.125};
  auto psi = RadialProfile::gaussian(0.5);
  RhoGrid rho(0.0, 24.0, 48);
  for (int k : {0, 1, 4, 16}) {
    auto f = gaussian_field(rg, k, k);
    auto r = radial_convolution_bound(psi, f, cg);
    CHECK(r.ratio <= 1.0 + 1e-6);
    auto h = hankel_forward(f, rho);
    for (int i = 0; i < rho.size(); ++i) h.at(k, i) *= psi.hat(rho.nodes[i]);
    auto direct = hankel_inverse(h, rg);
    double m = 0.0;
    for (int j = 0; j < rg.n_r; ++j) m = std::max(m, direct.l2theta_sq(j));
    CHECK(std::abs(r.lhs / std::sqrt(m) - 1.0) < 1e-4);
  }
  auto numeric = psi;
  numeric.hat = nullptr;
  auto a = radial_convolution_bound(numeric, gaussian_field(rg, 4, 4), cg);
  auto b = radial_convolution_bound(psi, gaussian_field(rg, 4, 4), cg);
  CHECK(std::abs(a.lhs / b.lhs - 1.0) < 1e-8);
}

TEST_CASE("mollifier limit of the convolution ratio") {
  RadialGrid rg(16.0, 256);
  auto r = radial_convolution_bound(RadialProfile::gaussian(0.05), gaussian_field(rg, 1, 1), {256, 0.125});
  CHECK(std::abs(r.ratio - 1.0) < 0.03);
}

TEST_CASE("Leibniz product in angular Sobolev norms") {
  RadialGrid rg(16.0, 256);
  CartesianGrid cg{256, 0.125};
  auto f = gaussian_field(rg, 2, 2);
  auto g = gaussian_field(rg, 3, 1);
  auto fg = product(f, g);
  CHECK(fg.k_max == 5);
  CHECK(std::abs(fg.at(3, 40) - f.at(2, 40) * g.at(1, 40)) < 1e-15);
  SobolevSpec s{0.5, 1.0};
  auto r = leibniz_check(f, g, s, cg);
  CHECK(!r.skipped);
  CHECK(r.c_emp > 0.0);
  CHECK(r.c_emp < 10.0);
  auto z = leibniz_check(f, AngularSpectrumField(rg, 1), s, cg);
  CHECK(z.lhs == 0.0);
  CHECK_THROWS_AS(leibniz_check(f, g, {1.5, 1.0}, cg), DomainError);
  CHECK_THROWS_AS(leibniz_check(f, g, {0.5, 0.5}, cg), DomainError);
}
