#include "fbl/semilinear/lifespan.hpp"

#include <algorithm>
#include <cmath>

#include "fbl/core/errors.hpp"
#include "fbl/core/parallel.hpp"

namespace fbl {

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  LineFit f;
  f.points = static_cast<int>(x.size());
  if (x.size() != y.size() || x.size() < 2) return f;
  double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx <= 0.0) return f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double e = y[i] - (f.slope * x[i] + f.intercept);
    res += e * e;
  }
  f.r2 = syy > 0.0 ? 1.0 - res / syy : 1.0;
  return f;
}

std::pair<std::vector<double>, std::vector<double>> lifespan_data(const LifespanConfig& cfg, double eps) {
  if (!(eps > 0.0)) throw DomainError("data size must be positive");
  std::vector<double> phi = gaussian_bump(cfg.grid, cfg.width);
  double size = periodic_sobolev(cfg.grid, phi, cfg.s) + periodic_sobolev(cfg.grid, phi, cfg.s - 1.0);
  double a = eps / size;
  for (double& x : phi) x *= a;
  return {phi, phi};
}

LifespanRecord lifespan_run(const LifespanConfig& cfg, double coef, double eps) {
  SolverOptions o = cfg.solver;
  o.s = cfg.s;
  WaveSolver solver(cfg.grid, NonlinearitySpec::dt_power(cfg.p, coef), o);
  auto [u0, u1] = lifespan_data(cfg, eps);
  LifespanRecord r = evolve_until_blowup(solver, solver.initial(u0, u1), cfg.horizon);
  r.epsilon = eps;
  return r;
}

double calibrate_coefficient(const LifespanConfig& cfg, std::vector<CalibrationStep>* trail) {
  std::vector<double> eps = cfg.eps;
  std::sort(eps.begin(), eps.end(), std::greater<>());
  if (static_cast<int>(eps.size()) < cfg.min_points) throw DomainError("eps grid smaller than the required point count");
  double target = eps[cfg.min_points - 1];
  auto coef_at = [](int j) { return std::pow(10.0, j / 4.0); };
  auto blows = [&](int j) {
    LifespanRecord r = lifespan_run(cfg, coef_at(j), target);
    if (trail) trail->push_back({coef_at(j), r.T_blow, r.finite()});
    return r.finite();
  };
  int lo = 0, hi = 32;
  if (blows(lo)) return coef_at(lo);
  if (!blows(hi)) throw WindowError("no coefficient on the ladder produces blow-up within the horizon");
  while (hi - lo > 1) {
    int mid = (lo + hi) / 2;
    if (blows(mid)) hi = mid;
    else lo = mid;
  }
  return coef_at(hi);
}

LifespanReport lifespan_sweep(const LifespanConfig& cfg) {
  LifespanReport rep;
  rep.config = cfg;
  if (cfg.eps.empty()) throw DomainError("empty eps grid");
  if (static_cast<int>(cfg.eps.size()) < cfg.min_points) {
    rep.status = "inconclusive";
    rep.coef = cfg.coef;
    return rep;
  }
  rep.coef = cfg.coef > 0.0 ? cfg.coef : calibrate_coefficient(cfg, &rep.calibration);
  rep.records.resize(cfg.eps.size());
  parallel_for(cfg.eps.size(), [&](std::size_t i) { rep.records[i] = lifespan_run(cfg, rep.coef, cfg.eps[i]); });
  std::vector<double> x2, xp, y;
  for (const auto& r : rep.records)
    if (r.finite()) {
      x2.push_back(std::pow(r.epsilon, -2.0));
      xp.push_back(std::pow(r.epsilon, -(cfg.p - 1.0)));
      y.push_back(std::log(r.T_blow));
    }
  rep.fit_eps2 = fit_line(x2, y);
  rep.fit_epsp = fit_line(xp, y);
  if (static_cast<int>(y.size()) < cfg.min_points) rep.status = "inconclusive";
  else rep.status = (rep.fit_eps2.slope > 0.0 && rep.fit_eps2.r2 >= 0.9) ? "pass" : "fail";
  return rep;
}

ScalingCheck scaling_check(const LifespanConfig& cfg, double coef, double eps, double lambda) {
  if (cfg.p != 3) throw DomainError("scaling check covers the cubic case");
  if (!(lambda >= 1.0)) throw DomainError("scaling check needs lambda >= 1");
  ScalingCheck c;
  c.lambda = lambda;
  LifespanConfig fine = cfg;
  int n = static_cast<int>(std::lround(cfg.grid.n * lambda));
  fine.grid = WaveGrid{n + n % 2, cfg.grid.length};
  SolverOptions o = cfg.solver;
  o.s = cfg.s;
  auto [u0, u1] = lifespan_data(fine, eps);
  {
    WaveSolver solver(fine.grid, NonlinearitySpec::dt_power(3, coef), o);
    c.T_base = evolve_until_blowup(solver, solver.initial(u0, u1), cfg.horizon).T_blow;
  }
  std::vector<double> phi = gaussian_bump(fine.grid, cfg.width, lambda);
  double a = u0[static_cast<std::size_t>(fine.grid.n / 2) * fine.grid.n + fine.grid.n / 2];
  std::vector<double> v0(phi.size()), v1(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    v0[i] = a * phi[i] / std::sqrt(lambda);
    v1[i] = a * phi[i] * std::sqrt(lambda);
  }
  SolverOptions os = o;
  os.dt_max = o.dt_max / lambda;
  WaveSolver solver(fine.grid, NonlinearitySpec::dt_power(3, coef), os);
  c.T_scaled = evolve_until_blowup(solver, solver.initial(v0, v1), cfg.horizon / lambda).T_blow;
  c.rel_error = std::abs(lambda * c.T_scaled / c.T_base - 1.0);
  return c;
}

}  // namespace fbl
