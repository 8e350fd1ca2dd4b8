#include "fbl/norms/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "fbl/core/errors.hpp"
#include "fbl/core/parallel.hpp"
#include "fbl/core/quadrature.hpp"
#include "fbl/fields/hankel.hpp"
#include "fbl/specfun/bessel.hpp"

namespace fbl {

namespace {

struct Spectrum {
  std::vector<double> q;   // |xi|^2
  std::vector<double> a2;  // |F|^2 scaled so that sum a2 = ||f||_2^2
};

Spectrum power_spectrum(const CartesianField& f) {
  std::vector<cplx> s = cartesian_spectrum(f);
  const int n = f.grid.n;
  double scale = f.grid.h * f.grid.h / (static_cast<double>(n) * n);
  Spectrum out;
  out.q.resize(s.size());
  out.a2.resize(s.size());
  for (int i = 0; i < n; ++i) {
    double a = f.grid.xi(i);
    for (int j = 0; j < n; ++j) {
      double b = f.grid.xi(j);
      std::size_t idx = static_cast<std::size_t>(i) * n + j;
      out.q[idx] = a * a + b * b;
      out.a2[idx] = std::norm(s[idx]) * scale;
    }
  }
  return out;
}

// weighted sums of |F|^2 over the whole box and over its outer shell; bins
// below the roundoff floor of the transform are dropped
double hdot_sq(const Spectrum& sp, double s, double q_nyq, double* shell) {
  double peak = *std::max_element(sp.a2.begin(), sp.a2.end());
  double floor = 1e-26 * peak;
  double total = 0.0, outer = 0.0;
  for (std::size_t i = 0; i < sp.q.size(); ++i) {
    if (sp.q[i] == 0.0 || sp.a2[i] < floor) continue;
    double v = std::exp(s * std::log(sp.q[i])) * sp.a2[i];
    total += v;
    if (sp.q[i] > 0.81 * q_nyq) outer += v;
  }
  if (shell) *shell = outer;
  return total;
}

}  // namespace

double interp_factor(double delta, int n) {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("interpolation needs 0 < delta < 1");
  return std::pow((2.0 / n) * (1.0 - delta) / delta, 0.5 * (1.0 - delta));
}

InterpSample interp_sample(const CartesianField& f, double delta, const std::string& id) {
  InterpSample r;
  r.id = id;
  r.delta = delta;
  r.factor = interp_factor(delta);
  Spectrum sp = power_spectrum(f);
  double nyq = std::numbers::pi / f.grid.h;
  double shell = 0.0;
  double hs = hdot_sq(sp, 1.0 / (1.0 - delta), nyq * nyq, &shell);
  if (shell > 1e-10 * hs)
    throw ResolutionError("Hdot order " + std::to_string(1.0 / (1.0 - delta)) + " not resolved by the grid");
  double l2 = 0.0;
  for (double v : sp.a2) l2 += v;
  r.hdot = std::sqrt(hs);
  r.l2 = std::sqrt(l2);
  r.lhs = f.max_abs();
  double rhs = r.factor * std::pow(r.hdot, 1.0 - delta) * std::pow(r.l2, delta);
  r.c_emp = rhs > 0.0 ? r.lhs / rhs : 0.0;
  return r;
}

CartesianField interp_family_member(std::uint64_t seed, int index, const CartesianGrid& g) {
  std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(index));
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_real_distribution<double> width(0.7, 1.5), center(-3.0, 3.0);
  std::normal_distribution<double> amp;
  int m = count(rng);
  struct Bump { double x, y, w; cplx c; };
  std::vector<Bump> bumps;
  for (int i = 0; i < m; ++i) {
    double x = center(rng), y = center(rng), w = width(rng);
    double re = amp(rng), im = amp(rng);
    bumps.push_back({x, y, w, cplx(re, im)});
  }
  CartesianField f(g);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      cplx v = 0.0;
      for (const auto& b : bumps) {
        double dx = g.x(i) - b.x, dy = g.x(j) - b.y;
        v += b.c * std::exp(-(dx * dx + dy * dy) / (2.0 * b.w * b.w));
      }
      f.at(i, j) = v;
    }
  return f;
}

InterpReport interp_bound_check(const std::vector<double>& deltas, int family_size, std::uint64_t seed,
                                const CartesianGrid& grid) {
  InterpReport rep;
  rep.deltas = deltas;
  rep.seed = seed;
  rep.family_size = family_size;
  CartesianGrid fine{2 * grid.n, 0.5 * grid.h};
  std::size_t nd = deltas.size();
  std::vector<std::vector<InterpSample>> coarse(family_size), refined(family_size);
  parallel_for(static_cast<std::size_t>(family_size), [&](std::size_t i) {
    CartesianField a = interp_family_member(seed, static_cast<int>(i), grid);
    CartesianField b = interp_family_member(seed, static_cast<int>(i), fine);
    std::string id = "g" + std::to_string(i);
    for (double d : deltas) {
      coarse[i].push_back(interp_sample(a, d, id));
      refined[i].push_back(interp_sample(b, d, id));
    }
  });
  rep.sup_by_delta.assign(nd, 0.0);
  rep.sup_by_delta_refined.assign(nd, 0.0);
  for (int i = 0; i < family_size; ++i)
    for (std::size_t d = 0; d < nd; ++d) {
      rep.samples.push_back(coarse[i][d]);
      rep.sup_by_delta[d] = std::max(rep.sup_by_delta[d], coarse[i][d].c_emp);
      rep.sup_by_delta_refined[d] = std::max(rep.sup_by_delta_refined[d], refined[i][d].c_emp);
    }
  for (std::size_t d = 0; d < nd; ++d) {
    rep.sup_c = std::max(rep.sup_c, rep.sup_by_delta[d]);
    rep.sup_c_refined = std::max(rep.sup_c_refined, rep.sup_by_delta_refined[d]);
    rep.refinement_change = std::max(rep.refinement_change,
                                     std::abs(rep.sup_by_delta_refined[d] / rep.sup_by_delta[d] - 1.0));
  }
  rep.passed = std::isfinite(rep.sup_c) && rep.refinement_change <= 0.05;
  return rep;
}

GrowthReport growth_bound_check(const std::vector<double>& t, const std::vector<CartesianField>& u,
                                const std::vector<CartesianField>& ut, double delta, double s) {
  if (t.empty() || t.size() != u.size() || t.size() != ut.size()) throw DomainError("inconsistent time samples");
  if (!(s >= 1.0) || !(delta > 0.0) || delta > 1.0 - 1.0 / s + 1e-12)
    throw DomainError("growth bound needs s >= 1 and 0 < delta <= 1 - 1/s");
  GrowthReport rep;
  rep.delta = delta;
  rep.s = s;
  double factor = interp_factor(delta);
  Spectrum s0 = power_spectrum(u[0]);
  double l2_0 = 0.0;
  for (double v : s0.a2) l2_0 += v;
  l2_0 = std::sqrt(l2_0);
  double sup_ut = 0.0, sup_dtx = 0.0;
  rep.min_l2_slack = INFINITY;
  for (std::size_t n = 0; n < t.size(); ++n) {
    Spectrum su = power_spectrum(u[n]);
    Spectrum sv = power_spectrum(ut[n]);
    double ut2 = 0.0, dtx2 = 0.0, l2 = 0.0;
    for (std::size_t i = 0; i < su.q.size(); ++i) {
      double w = std::pow(1.0 + su.q[i], s - 1.0);
      ut2 += sv.a2[i];
      dtx2 += w * (sv.a2[i] + su.q[i] * su.a2[i]);
      l2 += su.a2[i];
    }
    sup_ut = std::max(sup_ut, std::sqrt(ut2));
    sup_dtx = std::max(sup_dtx, std::sqrt(dtx2));
    GrowthSample g;
    g.t = t[n];
    g.l2 = std::sqrt(l2);
    g.l2_bound = l2_0 + t[n] * sup_ut;
    double hd = std::sqrt(hdot_sq(su, 1.0 / (1.0 - delta), INFINITY, nullptr));
    g.linf = u[n].max_abs();
    g.linf_bound = factor * (std::pow(hd, 1.0 - delta) * std::pow(l2_0, delta) + std::pow(t[n], delta) * sup_dtx);
    g.c_emp = g.linf_bound > 0.0 ? g.linf / g.linf_bound : 0.0;
    rep.min_l2_slack = std::min(rep.min_l2_slack, (g.l2_bound - g.l2) / std::max(g.l2_bound, 1e-300));
    rep.c_emp_max = std::max(rep.c_emp_max, g.c_emp);
    rep.samples.push_back(g);
  }
  rep.passed = rep.min_l2_slack >= -1e-6 && std::isfinite(rep.c_emp_max);
  return rep;
}

RadialProfile RadialProfile::gaussian(double sigma) {
  RadialProfile p;
  double c = 1.0 / (2.0 * std::numbers::pi * sigma * sigma);
  p.psi = [=](double r) { return c * std::exp(-0.5 * r * r / (sigma * sigma)); };
  p.hat = [=](double xi) { return std::exp(-0.5 * sigma * sigma * xi * xi); };
  p.extent = 12.0 * sigma;
  return p;
}

RadialProfile RadialProfile::scaled(double lambda) const {
  RadialProfile p;
  auto f = psi;
  p.psi = [=](double r) { return lambda * lambda * f(lambda * r); };
  if (hat) {
    auto h = hat;
    p.hat = [=](double xi) { return h(xi / lambda); };
  }
  p.extent = extent / lambda;
  return p;
}

namespace {

Rule profile_rule(const RadialProfile& p) {
  int panels = std::max(8, static_cast<int>(std::ceil(p.extent * 4.0)));
  return composite_gauss(0.0, p.extent, panels, 16);
}

}  // namespace

double radial_transform(const RadialProfile& p, double xi) {
  Rule r = profile_rule(p);
  double s = 0.0;
  for (std::size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * p.psi(r.x[i]) * bessel_j(0, xi * r.x[i]) * r.x[i];
  return 2.0 * std::numbers::pi * s;
}

double radial_l1(const RadialProfile& p) {
  Rule r = profile_rule(p);
  double s = 0.0;
  for (std::size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * std::abs(p.psi(r.x[i])) * r.x[i];
  return 2.0 * std::numbers::pi * s;
}

ConvolutionReport radial_convolution_bound(const RadialProfile& psi, const AngularSpectrumField& f,
                                           const CartesianGrid& grid) {
  CartesianField c = synthesize(f, grid);
  if (c.boundary_ratio() > 1e-8) throw TruncationError("field reaches the Cartesian box edge", 0.5 * grid.extent());
  ConvolutionReport rep;
  rep.l1 = radial_l1(psi);
  std::vector<cplx> s = cartesian_spectrum(c);
  const int n = grid.n;
  double xmax = std::sqrt(2.0) * std::numbers::pi / grid.h;
  std::function<double(double)> hat = psi.hat;
  RhoGrid table;
  std::vector<cplx> values;
  if (!hat) {
    table = RhoGrid(0.0, xmax * 1.0001, std::max(4, static_cast<int>(std::ceil(xmax * psi.extent / 8.0))));
    values.resize(table.size());
    parallel_for(static_cast<std::size_t>(table.size()),
                 [&](std::size_t i) { values[i] = radial_transform(psi, table.nodes[i]); });
    hat = [&](double xi) { return table.interpolate(values.data(), xi).real(); };
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s[static_cast<std::size_t>(i) * n + j] *= hat(std::hypot(grid.xi(i), grid.xi(j)));
  CartesianField out = from_cartesian_spectrum(std::move(s), grid);
  double r_in = std::min(f.grid.r_max, 0.5 * grid.extent() - 2.0 * grid.h);
  int panels = std::max(1, std::min(f.grid.panels(), static_cast<int>(r_in / f.grid.panel_width())));
  RadialGrid inner(panels * f.grid.panel_width(), panels * f.grid.per_panel, f.grid.per_panel);
  AngularSpectrumField back = analyze(out, inner, f.k_max, {.order = 8, .upsample = 2});
  for (int j = 0; j < inner.n_r; ++j) rep.lhs = std::max(rep.lhs, back.l2theta_sq(j));
  for (int j = 0; j < f.grid.n_r; ++j) rep.f_norm = std::max(rep.f_norm, f.l2theta_sq(j));
  rep.lhs = std::sqrt(rep.lhs);
  rep.f_norm = std::sqrt(rep.f_norm);
  rep.ratio = rep.lhs / (rep.l1 * rep.f_norm);
  return rep;
}

AngularSpectrumField product(const AngularSpectrumField& f, const AngularSpectrumField& g) {
  if (!(f.grid == g.grid)) throw DomainError("product needs a common radial grid");
  AngularSpectrumField out(f.grid, f.k_max + g.k_max);
  for (int a = -f.k_max; a <= f.k_max; ++a)
    for (int b = -g.k_max; b <= g.k_max; ++b) {
      const cplx* x = f.channel(a);
      const cplx* y = g.channel(b);
      cplx* z = out.channel(a + b);
      for (int j = 0; j < f.grid.n_r; ++j) z[j] += x[j] * y[j];
    }
  return out;
}

double linf_radial_hb(const AngularSpectrumField& f, double b) {
  double m = 0.0;
  for (int j = 0; j < f.grid.n_r; ++j) {
    double s = 0.0;
    for (int k = -f.k_max; k <= f.k_max; ++k) s += std::pow(1.0 + double(k) * k, b) * std::norm(f.at(k, j));
    m = std::max(m, s);
  }
  return std::sqrt(2.0 * std::numbers::pi * m);
}

LeibnizReport leibniz_check(const AngularSpectrumField& f, const AngularSpectrumField& g, const SobolevSpec& spec,
                            const CartesianGrid& grid) {
  if (!(spec.s > 0.0 && spec.s < 1.0) || !(spec.b > 0.5)) throw DomainError("Leibniz check needs 0 < s < 1 and b > 1/2");
  LeibnizReport r;
  r.lhs = sobolev_norm(product(f, g), spec, grid);
  r.f_inf = linf_radial_hb(f, spec.b);
  r.g_inf = linf_radial_hb(g, spec.b);
  r.f_norm = sobolev_norm(f, spec, grid);
  r.g_norm = sobolev_norm(g, spec, grid);
  r.rhs = r.f_inf * r.g_norm + r.g_inf * r.f_norm;
  r.skipped = !(r.rhs > 0.0);
  r.c_emp = r.skipped ? 0.0 : r.lhs / r.rhs;
  return r;
}

}  // namespace fbl
