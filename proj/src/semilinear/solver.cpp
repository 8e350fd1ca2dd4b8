#include "fbl/semilinear/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fbl/core/errors.hpp"
#include "fbl/core/fft.hpp"
#include "fbl/simd/kernels.hpp"

namespace fbl {

void NonlinearitySpec::validate() const {
  if (p < 3) throw ConfigError("nonlinearity degree must be at least 3");
  if (terms.empty()) throw ConfigError("nonlinearity needs at least one term");
  for (const auto& t : terms) {
    if (t.alpha[0] < 0 || t.alpha[1] < 0 || t.alpha[2] < 0) throw ConfigError("negative multi-index");
    if (t.alpha[0] + t.alpha[1] + t.alpha[2] != p) throw ConfigError("term degree differs from p");
    if (t.poly.empty()) throw ConfigError("empty coefficient polynomial");
  }
}

bool NonlinearitySpec::is_zero() const {
  for (const auto& t : terms)
    for (double c : t.poly)
      if (c != 0.0) return false;
  return true;
}

NonlinearitySpec NonlinearitySpec::dt_power(int p, double coef) {
  NonlinearitySpec s;
  s.p = p;
  s.terms.push_back({{p, 0, 0}, {coef}});
  return s;
}

double WaveGrid::xi(int i) const {
  int k = i < n / 2 ? i : i - n;
  return 2.0 * std::numbers::pi * k / length;
}

WaveSolver::WaveSolver(WaveGrid grid, NonlinearitySpec spec, SolverOptions opts)
    : grid_(grid), spec_(std::move(spec)), opts_(opts) {
  if (grid_.n < 8 || grid_.n % 2) throw ConfigError("grid size must be even and at least 8");
  spec_.validate();
  double frac = opts_.dealias > 0.0 ? opts_.dealias : (spec_.p <= 3 ? 2.0 / 3.0 : 3.0 / 5.0);
  int n = grid_.n, m = grid_.half();
  double cut = frac * std::numbers::pi / grid_.h();
  k_.resize(grid_.spectral_size());
  mask_.resize(k_.size());
  kx_.resize(k_.size());
  ky_.resize(k_.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      std::size_t idx = static_cast<std::size_t>(i) * m + j;
      double a = grid_.xi(i), b = 2.0 * std::numbers::pi * j / grid_.length;
      if (j == n / 2) b = -b;
      kx_[idx] = a;
      ky_[idx] = b;
      k_[idx] = std::hypot(a, b);
      mask_[idx] = (std::abs(a) < cut && std::abs(b) < cut) ? 1.0 : 0.0;
      xi_max_ = std::max(xi_max_, k_[idx]);
    }
  ew_.resize(k_.size());
  for (std::size_t i = 0; i < k_.size(); ++i) {
    int j = static_cast<int>(i % m);
    double mult = (j == 0 || j == n / 2) ? 1.0 : 2.0;
    ew_[i] = mult * std::pow(1.0 + k_[i] * k_[i], opts_.s - 1.0);
  }
}

std::vector<double> WaveSolver::to_physical(const std::vector<cplx>& spec) const {
  std::vector<double> out(static_cast<std::size_t>(grid_.n) * grid_.n);
  fft::c2r_2d(spec.data(), out.data(), grid_.n, grid_.n);
  double scale = 1.0 / (static_cast<double>(grid_.n) * grid_.n);
  for (double& x : out) x *= scale;
  return out;
}

std::vector<cplx> WaveSolver::to_spectral(const std::vector<double>& phys) const {
  std::vector<cplx> out(grid_.spectral_size());
  fft::r2c_2d(phys.data(), out.data(), grid_.n, grid_.n);
  return out;
}

WaveState WaveSolver::initial(const std::vector<double>& u0, const std::vector<double>& u1) const {
  std::size_t np = static_cast<std::size_t>(grid_.n) * grid_.n;
  if (u0.size() != np || u1.size() != np) throw DomainError("data size does not match the grid");
  WaveState s;
  s.grid = grid_;
  s.u = to_spectral(u0);
  s.v = to_spectral(u1);
  return s;
}

std::vector<cplx> WaveSolver::nonlinear(const std::vector<cplx>& u, const std::vector<cplx>& v,
                                        double* rate) const {
  const auto& K = simd::active();
  std::size_t np = static_cast<std::size_t>(grid_.n) * grid_.n;
  std::vector<double> acc(np, 0.0), tmp(np);
  std::vector<double> vt, ux, uy, up;
  bool need_u = false, need_x = false, need_y = false;
  for (const auto& t : spec_.terms) {
    need_u |= t.poly.size() > 1;
    need_x |= t.alpha[1] > 0;
    need_y |= t.alpha[2] > 0;
  }
  vt = to_physical(v);
  if (need_u) up = to_physical(u);
  auto derivative = [&](const std::vector<double>& kd) {
    std::vector<cplx> d(u.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = cplx(0.0, kd[i]) * u[i];
    return to_physical(d);
  };
  if (need_x) ux = derivative(kx_);
  if (need_y) uy = derivative(ky_);
  auto amax = [](const std::vector<double>& a) {
    double m = 0.0;
    for (double x : a) m = std::max(m, std::abs(x));
    return m;
  };
  double dmax = amax(vt);
  if (need_x) dmax = std::max(dmax, amax(ux));
  if (need_y) dmax = std::max(dmax, amax(uy));
  double umax = need_u ? amax(up) : 0.0;
  double r = 0.0;
  for (const auto& t : spec_.terms) {
    const std::vector<double>* base[3] = {&vt, &ux, &uy};
    bool first = true;
    for (int c = 0; c < 3; ++c) {
      if (t.alpha[c] == 0) continue;
      if (first) {
        K.scaled_power(base[c]->data(), 1.0, t.alpha[c], tmp.data(), np);
        first = false;
      } else {
        std::vector<double> f(np);
        K.scaled_power(base[c]->data(), 1.0, t.alpha[c], f.data(), np);
        for (std::size_t i = 0; i < np; ++i) tmp[i] *= f[i];
      }
    }
    double pmax = 0.0;
    if (t.poly.size() == 1) {
      for (std::size_t i = 0; i < np; ++i) acc[i] += t.poly[0] * tmp[i];
      pmax = std::abs(t.poly[0]);
    } else {
      for (std::size_t i = 0; i < np; ++i) {
        double pv = 0.0;
        for (std::size_t d = t.poly.size(); d-- > 0;) pv = pv * up[i] + t.poly[d];
        acc[i] += pv * tmp[i];
      }
      for (std::size_t d = 0; d < t.poly.size(); ++d) pmax += std::abs(t.poly[d]) * std::pow(umax, double(d));
    }
    r += pmax * std::pow(dmax, spec_.p - 1);
  }
  if (rate) *rate = r;
  std::vector<cplx> out = to_spectral(acc);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= mask_[i];
  return out;
}

double WaveSolver::stable_dt(const WaveState& s, std::vector<cplx>* n_out) const {
  double rate = 0.0;
  std::vector<cplx> nl = nonlinear(s.u, s.v, &rate);
  if (n_out) *n_out = std::move(nl);
  double dt = opts_.dt_max;
  if (opts_.adaptive && rate > 0.0) dt = std::min(dt, opts_.cfl / rate);
  return dt;
}

void WaveSolver::step(WaveState& s, double dt, const std::vector<cplx>* n_now) const {
  if (!(dt > 0.0)) throw ConfigError("step size must be positive");
  if (dt * xi_max_ > opts_.c_cfl * (1.0 + 1e-12)) throw ConfigError("step violates the CFL bound");
  const auto& K = simd::active();
  std::size_t n = k_.size();
  std::vector<double> c1(n), sk1(n), ks1(n), c2(n), sk2(n), ks2(n);
  for (std::size_t i = 0; i < n; ++i) {
    double k = k_[i];
    double a = k * dt * 0.5, b = k * dt;
    double sa = std::sin(a), ca = std::cos(a);
    double sb = 2.0 * sa * ca;
    c1[i] = ca;
    c2[i] = 2.0 * ca * ca - 1.0;
    sk1[i] = k > 0.0 ? sa / k : 0.5 * dt;
    sk2[i] = k > 0.0 ? sb / k : dt;
    ks1[i] = k * sa;
    ks2[i] = k * sb;
  }
  std::vector<cplx> zero(n, cplx(0.0));
  std::vector<cplx> uh(n), vh(n), uf(n), vf(n), ta(n), tb(n), tu(n), tv(n);
  K.wave_rotate(c1.data(), sk1.data(), ks1.data(), s.u.data(), s.v.data(), uh.data(), vh.data(), n);
  K.wave_rotate(c2.data(), sk2.data(), ks2.data(), s.u.data(), s.v.data(), uf.data(), vf.data(), n);
  if (spec_.is_zero()) {
    s.u = std::move(uf);
    s.v = std::move(vf);
    s.t += dt;
    return;
  }
  // increments have zero displacement component
  auto apply = [&](const double* c, const double* sk, const double* ks, const std::vector<cplx>& g,
                   std::vector<cplx>& a, std::vector<cplx>& b) {
    K.wave_rotate(c, sk, ks, zero.data(), g.data(), a.data(), b.data(), n);
  };
  std::vector<cplx> k1 = n_now ? *n_now : nonlinear(s.u, s.v, nullptr);
  apply(c1.data(), sk1.data(), ks1.data(), k1, ta, tb);
  for (std::size_t i = 0; i < n; ++i) {
    tu[i] = uh[i] + 0.5 * dt * ta[i];
    tv[i] = vh[i] + 0.5 * dt * tb[i];
  }
  std::vector<cplx> k2 = nonlinear(tu, tv, nullptr);
  for (std::size_t i = 0; i < n; ++i) {
    tu[i] = uh[i];
    tv[i] = vh[i] + 0.5 * dt * k2[i];
  }
  std::vector<cplx> k3 = nonlinear(tu, tv, nullptr);
  apply(c1.data(), sk1.data(), ks1.data(), k3, ta, tb);
  for (std::size_t i = 0; i < n; ++i) {
    tu[i] = uf[i] + dt * ta[i];
    tv[i] = vf[i] + dt * tb[i];
  }
  std::vector<cplx> k4 = nonlinear(tu, tv, nullptr);
  apply(c2.data(), sk2.data(), ks2.data(), k1, ta, tb);
  for (std::size_t i = 0; i < n; ++i) {
    uf[i] += dt / 6.0 * ta[i];
    vf[i] += dt / 6.0 * tb[i];
    k2[i] += k3[i];
  }
  apply(c1.data(), sk1.data(), ks1.data(), k2, ta, tb);
  for (std::size_t i = 0; i < n; ++i) {
    s.u[i] = uf[i] + dt / 3.0 * ta[i];
    s.v[i] = vf[i] + dt / 3.0 * tb[i] + dt / 6.0 * k4[i];
  }
  s.t += dt;
}

void WaveSolver::advance(WaveState& s, double t_end, double dt) const {
  long steps = std::lround((t_end - s.t) / dt);
  if (steps <= 0) return;
  double h = (t_end - s.t) / steps;
  for (long i = 0; i < steps; ++i) step(s, h);
  s.t = t_end;
}

double WaveSolver::energy(const WaveState& s) const {
  double e = 0.0;
  for (std::size_t i = 0; i < k_.size(); ++i)
    e += ew_[i] * (k_[i] * k_[i] * std::norm(s.u[i]) + std::norm(s.v[i]));
  double h = grid_.h();
  return std::sqrt(e) * h * h / grid_.length;
}

double WaveSolver::max_abs(const WaveState& s) const {
  double m = 0.0;
  for (double x : to_physical(s.u)) m = std::max(m, std::abs(x));
  for (double x : to_physical(s.v)) m = std::max(m, std::abs(x));
  return m;
}

double WaveSolver::edge_ratio(const WaveState& s, double scale) const {
  int n = grid_.n, w = std::max(2, n / 16);
  double m = 0.0;
  for (const auto* spec : {&s.u, &s.v}) {
    std::vector<double> p = to_physical(*spec);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i >= w && i < n - w && j >= w && j < n - w) continue;
        m = std::max(m, std::abs(p[static_cast<std::size_t>(i) * n + j]));
      }
  }
  return scale > 0.0 ? m / scale : 0.0;
}

double WaveSolver::support_radius(const WaveState& s) const {
  std::vector<double> a = to_physical(s.u), b = to_physical(s.v);
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max({m, std::abs(a[i]), std::abs(b[i])});
  double r = 0.0;
  int n = grid_.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::size_t idx = static_cast<std::size_t>(i) * n + j;
      if (std::max(std::abs(a[idx]), std::abs(b[idx])) > opts_.support_tol * m)
        r = std::max(r, std::hypot(grid_.x(i), grid_.x(j)));
    }
  return r;
}

LifespanRecord evolve_until_blowup(const WaveSolver& solver, WaveState s, double horizon) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) throw ConfigError("horizon must be finite and positive");
  const SolverOptions& o = solver.options();
  LifespanRecord rec;
  rec.grid_n = solver.grid().n;
  rec.grid_length = solver.grid().length;
  double reach = solver.support_radius(s) + horizon;
  if (reach > 0.9 * 0.5 * solver.grid().length)
    throw TruncationError("light cone reaches the periodic boundary before the horizon", 2.0 * reach / 0.9);
  double e0 = solver.energy(s);
  double dt = 0.0;
  rec.status = "horizon";
  while (s.t < horizon) {
    std::vector<cplx> nl;
    dt = std::min(solver.stable_dt(s, &nl), horizon - s.t);
    if (dt < o.dt_min && s.t + dt < horizon) {
      rec.status = "dt-collapse";
      break;
    }
    solver.step(s, dt, &nl);
    ++rec.steps;
    double e = solver.energy(s);
    if (!std::isfinite(e) || e > o.blow_factor * e0) {
      rec.status = "blow-up";
      break;
    }
  }
  rec.T_blow = s.t;
  rec.dt_final = dt;
  rec.final_norm = e0 > 0.0 ? solver.energy(s) / e0 : 0.0;
  return rec;
}

std::pair<CartesianField, CartesianField> linear_wave(const CartesianField& u0, const CartesianField& u1, double t) {
  if (!(u0.grid.n == u1.grid.n && u0.grid.h == u1.grid.h)) throw DomainError("data grids differ");
  std::vector<cplx> a = cartesian_spectrum(u0), b = cartesian_spectrum(u1);
  const CartesianGrid& g = u0.grid;
  std::vector<cplx> u(a.size()), v(a.size());
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      std::size_t idx = static_cast<std::size_t>(i) * g.n + j;
      double k = std::hypot(g.xi(i), g.xi(j));
      double c = std::cos(k * t), sn = std::sin(k * t);
      double sk = k > 0.0 ? sn / k : t;
      u[idx] = c * a[idx] + sk * b[idx];
      v[idx] = -k * sn * a[idx] + c * b[idx];
    }
  return {from_cartesian_spectrum(std::move(u), g), from_cartesian_spectrum(std::move(v), g)};
}

std::vector<double> gaussian_bump(const WaveGrid& g, double w, double lambda) {
  std::vector<double> f(static_cast<std::size_t>(g.n) * g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      double r2 = (g.x(i) * g.x(i) + g.x(j) * g.x(j)) * lambda * lambda;
      f[static_cast<std::size_t>(i) * g.n + j] = std::exp(-r2 / (2.0 * w * w));
    }
  return f;
}

double periodic_sobolev(const WaveGrid& g, const std::vector<double>& f, double s) {
  std::vector<cplx> sp(g.spectral_size());
  fft::r2c_2d(f.data(), sp.data(), g.n, g.n);
  int m = g.half();
  double acc = 0.0;
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < m; ++j) {
      double a = g.xi(i), b = 2.0 * std::numbers::pi * j / g.length;
      double mult = (j == 0 || j == g.n / 2) ? 1.0 : 2.0;
      acc += mult * std::pow(1.0 + a * a + b * b, s) * std::norm(sp[static_cast<std::size_t>(i) * m + j]);
    }
  double h = g.h();
  return std::sqrt(acc) * h * h / g.length;
}

}  // namespace fbl
