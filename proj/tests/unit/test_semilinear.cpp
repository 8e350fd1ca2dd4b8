#include <cmath>

#include "doctest.h"
#include "fbl/core/errors.hpp"
#include "fbl/semilinear/lifespan.hpp"
#include "fbl/semilinear/solver.hpp"

using namespace fbl;

namespace {

double spectral_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double d = 0.0, n = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d += std::norm(a[i] - b[i]);
    n += std::norm(b[i]);
  }
  return std::sqrt(d / n);
}

LifespanConfig small_config() {
  LifespanConfig c;
  c.grid = {128, 64.0};
  c.horizon = 10.0;
  return c;
}

}  // namespace

TEST_CASE("nonlinearity validation") {
  CHECK_NOTHROW(NonlinearitySpec::dt_power(3, 1.0).validate());
  CHECK_THROWS_AS(NonlinearitySpec::dt_power(2, 1.0).validate(), ConfigError);
  NonlinearitySpec s;
  s.p = 3;
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s.terms.push_back({{1, 1, 0}, {1.0}});
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s.terms[0].alpha = {1, 1, 1};
  CHECK_NOTHROW(s.validate());
  CHECK(NonlinearitySpec::dt_power(3, 0.0).is_zero());
}

TEST_CASE("linear limit matches the two-data wave solution") {
  WaveGrid g{128, 64.0};
  WaveSolver s(g, NonlinearitySpec::dt_power(3, 0.0));
  auto u0 = gaussian_bump(g, 1.5);
  auto u1 = gaussian_bump(g, 1.0);
  for (double& x : u1) x *= -0.7;
  auto st = s.initial(u0, u1);
  s.advance(st, 10.0, 0.1);
  CartesianGrid cg{g.n, g.h()};
  CartesianField a(cg), b(cg);
  for (std::size_t i = 0; i < u0.size(); ++i) {
    a.v[i] = u0[i];
    b.v[i] = u1[i];
  }
  auto [u, ut] = linear_wave(a, b, 10.0);
  auto pu = s.to_physical(st.u), pv = s.to_physical(st.v);
  double du = 0.0, dv = 0.0;
  for (std::size_t i = 0; i < pu.size(); ++i) {
    du = std::max(du, std::abs(pu[i] - u.v[i]));
    dv = std::max(dv, std::abs(pv[i] - ut.v[i]));
  }
  CHECK(du < 1e-6 * u.max_abs());
  CHECK(dv < 1e-6 * ut.max_abs());
}

TEST_CASE("zero data stay zero") {
  WaveGrid g{64, 32.0};
  WaveSolver s(g, NonlinearitySpec::dt_power(3, 5.0));
  std::vector<double> z(64 * 64, 0.0);
  auto st = s.initial(z, z);
  s.advance(st, 2.0, 0.1);
  for (auto c : st.u) CHECK(c == cplx(0.0));
  for (auto c : st.v) CHECK(c == cplx(0.0));
}

TEST_CASE("fourth order convergence under step halving") {
  WaveGrid g{64, 32.0};
  SolverOptions o;
  o.adaptive = false;
  WaveSolver s(g, NonlinearitySpec::dt_power(3, 1.0), o);
  auto u0 = gaussian_bump(g, 1.5);
  std::vector<cplx> v[3];
  double dt = 0.1;
  for (int i = 0; i < 3; ++i) {
    auto st = s.initial(u0, u0);
    s.advance(st, 1.0, dt);
    v[i] = st.v;
    dt *= 0.5;
  }
  double e1 = spectral_distance(v[0], v[1]), e2 = spectral_distance(v[1], v[2]);
  CHECK(e1 > 0.0);
  CHECK(std::log2(e1 / e2) >= 3.5);
}

TEST_CASE("step size limits") {
  WaveGrid g{128, 64.0};
  WaveSolver s(g, NonlinearitySpec::dt_power(3, 1.0));
  auto u0 = gaussian_bump(g, 2.0);
  auto st = s.initial(u0, u0);
  CHECK_THROWS_AS(s.step(st, 1.0), ConfigError);
  CHECK_THROWS_AS(s.step(st, -0.1), ConfigError);
  CHECK(s.stable_dt(st) <= s.options().dt_max);
}

TEST_CASE("split terms and axis symmetry of the nonlinearity") {
  WaveGrid g{64, 32.0};
  auto u0 = gaussian_bump(g, 1.5);
  NonlinearitySpec one;
  one.p = 3;
  one.terms = {{{3, 0, 0}, {0.5, 2.0}}};
  NonlinearitySpec two = one;
  two.terms = {{{3, 0, 0}, {0.5}}, {{3, 0, 0}, {0.0, 2.0}}};
  WaveSolver a(g, one), b(g, two);
  auto st = a.initial(u0, u0);
  CHECK(spectral_distance(a.nonlinear(st.u, st.v, nullptr), b.nonlinear(st.u, st.v, nullptr)) < 1e-13);
  NonlinearitySpec dx, dy;
  dx.terms = {{{1, 2, 0}, {1.0}}};
  dy.terms = {{{1, 0, 2}, {1.0}}};
  WaveSolver sx(g, dx), sy(g, dy);
  auto nx = sx.to_physical(sx.nonlinear(st.u, st.v, nullptr));
  auto ny = sy.to_physical(sy.nonlinear(st.u, st.v, nullptr));
  double d = 0.0, m = 0.0;
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      d = std::max(d, std::abs(nx[i * g.n + j] - ny[j * g.n + i]));
      m = std::max(m, std::abs(nx[i * g.n + j]));
    }
  CHECK(m > 0.0);
  CHECK(d < 1e-12 * m);
}

TEST_CASE("small data reach the horizon") {
  auto c = small_config();
  auto r = lifespan_run(c, 177.8, 0.01);
  CHECK(r.status == "horizon");
  CHECK(r.T_blow == doctest::Approx(10.0));
  CHECK(!r.finite());
}

TEST_CASE("blow-up time decreases with the data size") {
  auto c = small_config();
  double prev = INFINITY;
  for (double eps : {0.8, 1.0, 1.2}) {
    auto r = lifespan_run(c, 177.8, eps);
    CHECK(r.finite());
    CHECK(r.T_blow > 0.0);
    CHECK(r.T_blow < prev);
    prev = r.T_blow;
  }
}

TEST_CASE("light cone leaving the box is reported") {
  auto c = small_config();
  c.horizon = 40.0;
  try {
    lifespan_run(c, 1.0, 0.01);
    FAIL("expected a truncation error");
  } catch (const TruncationError& e) {
    CHECK(e.needed_extent > 64.0);
  }
}

TEST_CASE("line fit and inconclusive sweeps") {
  auto f = fit_line({1.0, 2.0, 3.0}, {3.0, 5.0, 7.0});
  CHECK(f.slope == doctest::Approx(2.0));
  CHECK(f.intercept == doctest::Approx(1.0));
  CHECK(f.r2 == doctest::Approx(1.0));
  auto c = small_config();
  c.eps = {1.0};
  c.coef = 177.8;
  CHECK(lifespan_sweep(c).status == "inconclusive");
}
