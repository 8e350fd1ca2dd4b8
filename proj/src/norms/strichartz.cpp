#include "fbl/norms/strichartz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fbl/core/errors.hpp"
#include "fbl/core/fft.hpp"
#include "fbl/core/parallel.hpp"
#include "fbl/core/quadrature.hpp"
#include "fbl/fields/sobolev.hpp"
#include "fbl/propagator/propagate.hpp"
#include "fbl/specfun/bessel.hpp"

namespace fbl {

namespace {

double datum_support_radius(const BandDatum& f, double tol) {
  double rg = 256.0 / f.lo();
  double width = 2.0 / f.hi();
  int panels = static_cast<int>(std::ceil(rg / width));
  RadialGrid g(rg, panels * 16);
  return support_radius(f.field(g), tol);
}

}  // namespace

SpaceTimeProfile space_time_profile(const BandDatum& f, const ProfileOptions& opts) {
  if (!(opts.T_max > 0.0)) throw DomainError("profile needs T_max > 0");
  SpaceTimeProfile p;
  const double lo = f.lo(), hi = f.hi();
  const int K = f.k_max();
  p.dt = opts.dt > 0.0 ? opts.dt : 0.5 / hi;
  p.r_data = datum_support_radius(f, opts.support_tol);
  p.r_ext = opts.T_max + p.r_data;
  double width = opts.panel_width > 0.0 ? opts.panel_width : 2.0 / hi;
  int panels = static_cast<int>(std::ceil(p.r_ext / width));
  Rule rr = composite_gauss(0.0, panels * width, panels, opts.per_panel);
  p.n_r = static_cast<int>(rr.x.size());
  p.r_ext = panels * width;

  double period = 2.0 * opts.T_max + p.r_ext + 2.0 * p.r_data;
  int P = 64;
  while (P * p.dt < period) P *= 2;
  p.fft_size = P;
  double drho = 2.0 * std::numbers::pi / (P * p.dt);
  int n_rho = static_cast<int>(std::floor((hi - lo) / drho)) + 1;
  int n_t = static_cast<int>(std::floor(opts.T_max / p.dt + 1e-9)) + 1;
  p.t.resize(n_t);
  for (int n = 0; n < n_t; ++n) p.t[n] = n * p.dt;

  std::vector<double> rho(n_rho);
  for (int j = 0; j < n_rho; ++j) rho[j] = lo + j * drho;
  std::vector<cplx> h(static_cast<std::size_t>(K + 1) * n_rho);
  for (int k = 0; k <= K; ++k)
    for (int j = 0; j < n_rho; ++j) h[static_cast<std::size_t>(k) * n_rho + j] = f.eval(k, rho[j]) * rho[j] * drho;

  p.r_exponents = opts.r_exponents;
  const std::size_t ne = opts.r_exponents.size();
  const int block = 64;
  const int n_blocks = (p.n_r + block - 1) / block;
  std::vector<std::vector<double>> part_sup(n_blocks), part_lr(n_blocks);
  parallel_for(static_cast<std::size_t>(n_blocks), [&](std::size_t b) {
    std::vector<double> sup(n_t, 0.0), lr(ne * n_t, 0.0), S(n_t);
    std::vector<double> y(n_rho), J(static_cast<std::size_t>(K + 1) * n_rho);
    std::vector<cplx> buf(P);
    int j_end = std::min(p.n_r, static_cast<int>(b + 1) * block);
    for (int i = static_cast<int>(b) * block; i < j_end; ++i) {
      double r = rr.x[i];
      for (int j = 0; j < n_rho; ++j) y[j] = rho[j] * r;
      bessel_j_range_batch(K, y.data(), n_rho, J.data());
      std::fill(S.begin(), S.end(), 0.0);
      for (int k = 0; k <= K; ++k) {
        std::fill(buf.begin(), buf.end(), 0.0);
        const double* Jk = J.data() + static_cast<std::size_t>(k) * n_rho;
        const cplx* hk = h.data() + static_cast<std::size_t>(k) * n_rho;
        for (int j = 0; j < n_rho; ++j) buf[j] = hk[j] * Jk[j];
        fft::c2c_1d(buf.data(), P, -1);
        for (int n = 0; n < n_t; ++n) {
          S[n] += std::norm(buf[n]);
          if (k > 0) S[n] += std::norm(buf[(P - n) % P]);
        }
      }
      for (int n = 0; n < n_t; ++n) {
        double s = 2.0 * std::numbers::pi * S[n];
        sup[n] = std::max(sup[n], s);
        for (std::size_t e = 0; e < ne; ++e) lr[e * n_t + n] += rr.w[i] * r * std::pow(s, 0.5 * opts.r_exponents[e]);
      }
    }
    part_sup[b] = std::move(sup);
    part_lr[b] = std::move(lr);
  });
  p.sup.assign(n_t, 0.0);
  p.lr.assign(ne, std::vector<double>(n_t, 0.0));
  for (int b = 0; b < n_blocks; ++b)
    for (int n = 0; n < n_t; ++n) {
      p.sup[n] = std::max(p.sup[n], part_sup[b][n]);
      for (std::size_t e = 0; e < ne; ++e) p.lr[e][n] += part_lr[b][e * n_t + n];
    }
  for (int n = 0; n < n_t; ++n) {
    p.sup[n] = std::sqrt(p.sup[n]);
    for (std::size_t e = 0; e < ne; ++e) p.lr[e][n] = std::pow(p.lr[e][n], 1.0 / opts.r_exponents[e]);
  }
  return p;
}

TimeNorm profile_time_norm(const SpaceTimeProfile& p, int column, double q, double T, double kappa) {
  const std::vector<double>& g = column < 0 ? p.sup : p.lr.at(column);
  std::size_t n = static_cast<std::size_t>(std::floor(T / p.dt + 1e-9)) + 1;
  if (n > g.size()) throw DomainError("time window exceeds the profile");
  TimeNorm out;
  if (std::isinf(q)) {
    out.value = lq_trapezoid(g, p.dt, q, n);
    return out;
  }
  double head = std::pow(lq_trapezoid(g, p.dt, q, n), q);
  double tail = 0.0;
  if (kappa > 0.0) {
    if (q * kappa <= 1.0) throw DomainError("tail integral diverges for q kappa <= 1");
    double s = 0.0;
    int c = 0;
    for (std::size_t i = n / 2; i < n; ++i) {
      s += g[i] * std::pow(p.t[i], kappa);
      ++c;
    }
    out.fit_B = s / c;
    tail = std::pow(out.fit_B, q) * std::pow(T, 1.0 - q * kappa) / (q * kappa - 1.0);
  }
  out.value = std::pow(head + tail, 1.0 / q);
  out.tail = head + tail > 0.0 ? tail / (head + tail) : 0.0;
  return out;
}

void finalize(StrichartzReport& r) {
  std::vector<double> v;
  for (const auto& s : r.samples)
    if (!s.skipped) v.push_back(s.ratio);
  r.sup_ratio = v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
  std::sort(v.begin(), v.end());
  r.median_ratio = v.empty() ? 0.0 : v.size() % 2 ? v[v.size() / 2] : 0.5 * (v[v.size() / 2 - 1] + v[v.size() / 2]);
}

StrichartzReport strichartz_endpoint_ratio(const BandDatum& f, const SpaceTimeProfile& p, double gamma,
                                           const std::vector<double>& Ts, const std::string& id) {
  if (!(gamma > 0.5)) throw DomainError("endpoint estimate needs gamma > 1/2");
  StrichartzReport rep;
  rep.spec = {2.0, kInf, Ts.empty() ? 0.0 : Ts.back()};
  rep.gamma = gamma;
  double norm = sobolev_norm(f.spectrum(64.0), {.s = gamma});
  for (double T : Ts) {
    RatioSample s{id, 2.0, kInf, gamma, T};
    s.lhs = profile_time_norm(p, -1, 2.0, T).value;
    s.rhs = std::sqrt(std::log(2.0 + T)) * norm;
    s.skipped = !(s.rhs > 0.0);
    s.ratio = s.skipped ? 0.0 : s.lhs / s.rhs;
    rep.samples.push_back(s);
  }
  finalize(rep);
  return rep;
}

StrichartzReport strichartz_endpoint_ratio(const BandDatum& f, double gamma, const std::vector<double>& Ts,
                                           const ProfileOptions& opts, const std::string& id) {
  if (!(gamma > 0.5)) throw DomainError("endpoint estimate needs gamma > 1/2");
  ProfileOptions o = opts;
  for (double T : Ts) o.T_max = std::max(o.T_max, T);
  return strichartz_endpoint_ratio(f, space_time_profile(f, o), gamma, Ts, id);
}

StrichartzReport generalized_ratio(const BandDatum& f, const SpaceTimeProfile& p, double q, double r,
                                   const std::string& id) {
  bool energy = std::isinf(q) && r == 2.0;
  if (!energy && !(1.0 / q + 1.0 / r < 0.5)) throw DomainError("generalized estimate needs 1/q + 1/r < 1/2");
  int column = -1;
  if (!std::isinf(r)) {
    auto it = std::find(p.r_exponents.begin(), p.r_exponents.end(), r);
    if (it == p.r_exponents.end()) throw DomainError("profile lacks the requested spatial exponent");
    column = static_cast<int>(it - p.r_exponents.begin());
  }
  double gamma = 1.0 - 1.0 / q - 2.0 / r;
  StrichartzReport rep;
  double T = p.t.back();
  rep.spec = {q, r, kInf};
  rep.gamma = gamma;
  double kappa = std::isinf(q) ? 0.0 : 0.5 - 1.0 / r;
  TimeNorm tn = profile_time_norm(p, column, q, T, kappa);
  RatioSample s{id, q, r, gamma, T};
  s.lhs = tn.value;
  s.rhs = sobolev_norm(f.spectrum(64.0), {.s = gamma, .homogeneous = true});
  s.skipped = !(s.rhs > 0.0);
  s.ratio = s.skipped ? 0.0 : s.lhs / s.rhs;
  rep.samples.push_back(s);
  rep.tail_share = tn.tail;
  finalize(rep);
  return rep;
}

StrichartzReport generalized_ratio(const BandDatum& f, double q, double r, const ProfileOptions& opts,
                                   const std::string& id) {
  ProfileOptions o = opts;
  if (!std::isinf(r) && std::find(o.r_exponents.begin(), o.r_exponents.end(), r) == o.r_exponents.end())
    o.r_exponents.push_back(r);
  return generalized_ratio(f, space_time_profile(f, o), q, r, id);
}

StrichartzReport strichartz_homogeneous_ratio(const BandDatum& f, double q, const ProfileOptions& opts,
                                              const std::string& id) {
  if (!(q > 2.0) || std::isinf(q)) throw DomainError("homogeneous estimate needs 2 < q < inf");
  return generalized_ratio(f, q, kInf, opts, id);
}

DilationStudy dilation_study(const BandDatum& f, double q, double r, const std::vector<double>& lambdas,
                             const ProfileOptions& base) {
  DilationStudy d;
  d.lambdas = lambdas;
  for (double l : lambdas) {
    ProfileOptions o = base;
    o.T_max = base.T_max / l;
    d.ratios.push_back(generalized_ratio(f.dilated(l), q, r, o).sup_ratio);
  }
  auto [mn, mx] = std::minmax_element(d.ratios.begin(), d.ratios.end());
  d.spread = *mx / *mn - 1.0;
  return d;
}

}  // namespace fbl
