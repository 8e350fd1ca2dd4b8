#include "fbl/harness/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "fbl/core/errors.hpp"
#include "fbl/core/parallel.hpp"
#include "fbl/fields/data.hpp"
#include "fbl/harness/output.hpp"
#include "fbl/kernel/certify.hpp"
#include "fbl/kernel/psi.hpp"
#include "fbl/norms/dyadic.hpp"
#include "fbl/norms/inequalities.hpp"
#include "fbl/norms/strichartz.hpp"
#include "fbl/propagator/kernel_form.hpp"
#include "fbl/propagator/propagate.hpp"
#include "fbl/semilinear/lifespan.hpp"
#include "fbl/specfun/bessel.hpp"
#include "fbl/specfun/bump.hpp"

namespace fbl {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Context {
  const RunConfig& cfg;
  RunReport& report;
  std::string file(const std::string& name) {
    std::string p = (fs::path(cfg.out_dir) / name).string();
    report.files.push_back(name);
    return p;
  }
  void check(int criterion, const std::string& name, bool ok, json data) {
    report.checks.push_back({criterion, name, ok ? Status::pass : Status::fail, std::move(data)});
  }
  void check(int criterion, const std::string& name, Status s, json data) {
    report.checks.push_back({criterion, name, s, std::move(data)});
  }
};

Tier tier_of(const Context& c) { return c.cfg.tier; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int as_int(double x) { return static_cast<int>(std::lround(x)); }

std::vector<double> dyadic_times(double lo, double hi) {
  std::vector<double> t;
  for (double x = lo; x <= hi * (1.0 + 1e-12); x *= 2.0) t.push_back(x);
  return t;
}

// ---------------------------------------------------------------- kernel

void kernel_verify(Context& c) {
  Tier t = tier_of(c);
  if (c.cfg.params.contains("dump_hat_alpha")) {
    std::string path = c.cfg.str("dump_hat_alpha", "");
    const auto& tab = hat_alpha_table();
    CsvWriter w(path, "hat_alpha", {"m", "re", "im"});
    for (std::size_t i = 0; i < tab.table().size(); ++i)
      w.row({double(i) * tab.h_m(), tab.table()[i].real(), tab.table()[i].imag()});
  }

  auto t0 = std::chrono::steady_clock::now();
  int bk = as_int(c.cfg.num("bessel_k_max", by_tier(t, 16, 64, 64)));
  double by = c.cfg.num("bessel_y_max", by_tier(t, 64.0, 512.0, 512.0));
  double step = c.cfg.num("bessel_y_step", by_tier(t, 0.125, 0.125, 0.03125));
  int ny = static_cast<int>(std::floor(by / step)) + 1;
  std::vector<double> worst(bk + 1, 0.0), at(bk + 1, 0.0);
  parallel_for(static_cast<std::size_t>(bk + 1), [&](std::size_t k) {
    for (int i = 0; i < ny; ++i) {
      double y = i * step;
      double d = std::abs(bessel_j(static_cast<int>(k), y) - bessel_j_integral(static_cast<int>(k), y));
      if (d > worst[k]) {
        worst[k] = d;
        at[k] = y;
      }
    }
  });
  {
    CsvWriter w(c.file("bessel.csv"), "bessel", {"k", "y_max", "y_step", "max_discrepancy", "argmax_y"});
    for (int k = 0; k <= bk; ++k) w.row({(long long)k, by, step, worst[k], at[k]});
  }
  double bmax = *std::max_element(worst.begin(), worst.end());
  c.check(1, "bessel dual path", bmax <= 1e-10,
          {{"k_max", bk}, {"y_max", by}, {"y_step", step}, {"max_discrepancy", num(bmax)}, {"tolerance", 1e-10},
           {"seconds", seconds_since(t0)}});

  t0 = std::chrono::steady_clock::now();

  int ns = as_int(c.cfg.num("symmetry_samples", by_tier(t, 1000.0, 10000.0, 100000.0)));
  std::mt19937_64 rng(c.cfg.seed);
  std::uniform_int_distribution<int> kd(1, 64);
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  struct Sample { int k; double m, r; };
  std::vector<Sample> samples(ns);
  for (auto& s : samples) {
    s.k = kd(rng);
    s.r = std::pow(2.0, -2.0 + 12.0 * ud(rng));
    s.m = (2.0 * ud(rng) - 1.0) * (s.r + 8.0);
  }
  std::vector<double> diff(ns);
  std::vector<cplx> val(ns);
  parallel_for(static_cast<std::size_t>(ns), [&](std::size_t i) {
    const auto& s = samples[i];
    val[i] = psi(s.k, s.m, s.r).value;
    cplx neg = psi_direct(-s.k, s.m, s.r, psi_nodes(s.k, s.r));
    diff[i] = std::abs(val[i] - neg);
  });
  {
    CsvWriter w(c.file("symmetry.csv"), "kernel_symmetry", {"k", "m", "r", "re", "im", "diff"});
    for (int i = 0; i < ns; ++i)
      w.row({(long long)samples[i].k, samples[i].m, samples[i].r, val[i].real(), val[i].imag(), diff[i]});
  }
  double smax = ns ? *std::max_element(diff.begin(), diff.end()) : 0.0;
  c.check(2, "kernel symmetry", smax <= 1e-9, {{"samples", ns}, {"max_discrepancy", num(smax)}, {"tolerance", 1e-9},
           {"seconds", seconds_since(t0)}});

  t0 = std::chrono::steady_clock::now();

  int kk = as_int(c.cfg.num("k_max", by_tier(t, 16, 64, 64)));
  int jl = as_int(c.cfg.num("j_lo", -2)), jh = as_int(c.cfg.num("j_hi", by_tier(t, 8, 10, 10)));
  EnvelopeGrid g = EnvelopeGrid::dyadic(kk, jl, jh);
  if (t == Tier::thorough) g.psi_node_factor = 2;
  auto cert = certify_envelopes(g);
  {
    CsvWriter w(c.file("envelope.csv"), "envelope", {"r", "slice_max"});
    for (std::size_t i = 0; i < cert.rs.size(); ++i) w.row({cert.rs[i], cert.slice_max[i]});
  }
  json rm = json::object();
  for (int i = 0; i < 4; ++i) rm[regime_name(static_cast<Regime>(i))] = num(cert.regime_max[i]);
  c.check(3, "envelope certification", cert.passed,
          {{"k_max", kk},
           {"r_range", {std::ldexp(1.0, jl), std::ldexp(1.0, jh)}},
           {"N", g.N},
           {"c_star", num(cert.c_star)},
           {"argmax", {{"k", cert.argmax.k}, {"m", cert.argmax.m}, {"r", cert.argmax.r},
                       {"regime", regime_name(cert.argmax.regime)}}},
           {"regime_max", rm},
           {"c_star_refined", num(cert.c_star_refined)},
           {"refinement_delta", num(cert.refinement_delta)},
           {"top_octave_change", num(cert.top_octave_change)},
           {"samples", cert.samples},
           {"seconds", seconds_since(t0)}});
}

void keystep(Context& c) {
  Tier t = tier_of(c);
  int kk = as_int(c.cfg.num("k_max", by_tier(t, 64, 256, 256)));
  int jl = as_int(c.cfg.num("j_lo", -2)), jh = as_int(c.cfg.num("j_hi", by_tier(t, 8, 10, 10)));
  auto cert = certify_keystep(KeystepGrid::dyadic(kk, jl, jh));
  {
    CsvWriter w(c.file("keystep.csv"), "keystep", {"delta", "k", "r", "keystep_norm", "tail"});
    for (std::size_t d = 0; d < cert.deltas.size(); ++d)
      for (std::size_t i = 0; i < cert.rs.size(); ++i)
        for (int k = 0; k <= kk; ++k)
          w.row({cert.deltas[d], (long long)k, cert.rs[i], cert.norms[d][i][k], cert.tails[d][i]});
  }
  double tail_share = 0.0;
  for (std::size_t d = 0; d < cert.deltas.size(); ++d)
    for (std::size_t i = 0; i < cert.rs.size(); ++i) {
      double head = *std::max_element(cert.norms[d][i].begin(), cert.norms[d][i].end());
      tail_share = std::max(tail_share, cert.tails[d][i] / head);
    }
  json sup = json::array();
  for (double s : cert.sup) sup.push_back(num(s));
  c.check(4, "keystep uniform bound", cert.passed && tail_share <= 0.01,
          {{"k_max", kk},
           {"r_range", {std::ldexp(1.0, jl), std::ldexp(1.0, jh)}},
           {"deltas", cert.deltas},
           {"sup", sup},
           {"argmax", {{"k", cert.argmax_k}, {"r", cert.argmax_r}}},
           {"last_over_median", num(cert.last_over_median)},
           {"max_tail_share", num(tail_share)},
           {"sup_refined", num(cert.sup_refined)},
           {"refinement_delta", num(cert.refinement_delta)}});
}

// ---------------------------------------------------------------- norms

void dyadic_sum(Context& c) {
  auto deltas = c.cfg.list("deltas", by_tier<std::vector<double>>(tier_of(c), {0.1, 0.25, 0.5},
                                                                   {0.1, 0.25, 0.5, 1.0}, {0.1, 0.25, 0.5, 1.0}));
  auto d = dyadic_check(deltas);
  {
    CsvWriter w(c.file("dyadic.csv"), "dyadic_sum", {"delta", "T", "sum", "ratio"});
    for (const auto& v : d.values) w.row({v.delta, v.T, v.sum, v.ratio});
  }
  json per = json::array();
  for (std::size_t i = 0; i < deltas.size(); ++i)
    per.push_back({{"delta", deltas[i]}, {"sup_ratio", num(d.sup_ratio[i])}, {"plateau", num(d.plateau[i])},
                   {"at_2_10", num(d.at_2_10[i])}});
  c.check(5, "dyadic log sum", d.passed && d.widening_change <= 1e-9,
          {{"per_delta", per}, {"widening_change", num(d.widening_change)}});
}

BandDatum datum(std::uint64_t seed, int k_max) {
  BandDatum::Options o;
  o.k_max = k_max;
  o.seed = seed;
  return BandDatum(o);
}

std::string datum_id(std::uint64_t seed) { return "band-" + std::to_string(seed); }

void strichartz_endpoint(Context& c) {
  Tier t = tier_of(c);
  int nd = as_int(c.cfg.num("data", by_tier(t, 2, 5, 5)));
  double gamma = c.cfg.num("gamma", 0.6);
  double tmax = c.cfg.num("T_max", by_tier(t, 256.0, 1024.0, 1024.0));
  int km = as_int(c.cfg.num("k_max", 8));
  auto Ts = dyadic_times(2.0, tmax);
  CsvWriter w(c.file("strichartz_endpoint.csv"), "strichartz", {"datum_id", "q", "r", "gamma", "T", "lhs", "rhs", "ratio"});
  json per = json::array();
  bool ok = true;
  for (int i = 0; i < nd; ++i) {
    std::uint64_t seed = c.cfg.seed + i;
    ProfileOptions o;
    o.T_max = tmax;
    auto rep = strichartz_endpoint_ratio(datum(seed, km), gamma, Ts, o, datum_id(seed));
    for (const auto& s : rep.samples) w.row({s.datum_id, s.q, s.r, s.gamma, s.T, s.lhs, s.rhs, s.ratio});
    bool b = std::isfinite(rep.sup_ratio) && rep.sup_ratio <= 3.0 * rep.median_ratio;
    ok = ok && b;
    per.push_back({{"datum_id", datum_id(seed)}, {"sup_ratio", num(rep.sup_ratio)},
                   {"median_ratio", num(rep.median_ratio)}, {"sup_over_median", num(rep.sup_ratio / rep.median_ratio)}});
  }
  c.check(7, "endpoint ratio bounded", ok,
          {{"gamma", gamma}, {"T_max", tmax}, {"data", per},
           {"esssup", "sup over |x| taken as the maximum over radial quadrature nodes"}});
}

void strichartz_q(Context& c) {
  Tier t = tier_of(c);
  auto qs = c.cfg.list("q", {3.0, 4.0, 8.0});
  double tmax = c.cfg.num("T_max", by_tier(t, 128.0, 256.0, 1024.0));
  auto lambdas = c.cfg.list("lambdas", by_tier<std::vector<double>>(t, {0.5, 1.0, 2.0}, {0.25, 0.5, 1.0, 2.0, 4.0},
                                                                    {0.25, 0.5, 1.0, 2.0, 4.0}));
  int km = as_int(c.cfg.num("k_max", 8));
  auto d = datum(c.cfg.seed, km);
  ProfileOptions o;
  o.T_max = tmax;
  auto prof = space_time_profile(d, o);
  CsvWriter w(c.file("strichartz_q.csv"), "strichartz", {"datum_id", "q", "r", "gamma", "T", "lhs", "rhs", "ratio"});
  json ratios = json::array();
  bool finite = true;
  for (double q : qs) {
    auto rep = generalized_ratio(d, prof, q, kInf, datum_id(c.cfg.seed));
    for (const auto& s : rep.samples) w.row({s.datum_id, s.q, s.r, s.gamma, s.T, s.lhs, s.rhs, s.ratio});
    finite = finite && std::isfinite(rep.sup_ratio) && rep.sup_ratio > 0.0;
    ratios.push_back({{"q", q}, {"ratio", num(rep.sup_ratio)}, {"tail_share", num(rep.tail_share)}});
  }
  c.check(8, "homogeneous ratios finite", finite, {{"T_max", tmax}, {"ratios", ratios}});
  ProfileOptions base;
  base.T_max = by_tier(t, 64.0, 128.0, 256.0);
  json spreads = json::array();
  bool inv = true;
  for (double q : qs) {
    auto st = dilation_study(d, q, kInf, lambdas, base);
    for (std::size_t i = 0; i < st.lambdas.size(); ++i)
      w.row({datum_id(c.cfg.seed) + "@" + format_cell(st.lambdas[i]), q, kInf, 1.0 - 1.0 / q, base.T_max / st.lambdas[i],
             0.0, 0.0, st.ratios[i]});
    inv = inv && st.spread <= 0.02;
    spreads.push_back({{"q", q}, {"spread", num(st.spread)}});
  }
  c.check(8, "dilation invariance", inv, {{"lambdas", lambdas}, {"base_T", base.T_max}, {"spreads", spreads}});
}

void generalized(Context& c) {
  Tier t = tier_of(c);
  double tmax = c.cfg.num("T_max", by_tier(t, 256.0, 1024.0, 1024.0));
  int km = as_int(c.cfg.num("k_max", 8));
  std::vector<std::pair<double, double>> pairs = {{6.0, 8.0}, {4.0, 6.0}};
  if (c.cfg.params.contains("q") || c.cfg.params.contains("r"))
    pairs = {{c.cfg.num("q", 6.0), c.cfg.num("r", 8.0)}};
  auto d = datum(c.cfg.seed, km);
  ProfileOptions o;
  o.T_max = tmax;
  o.r_exponents = {2.0};
  for (auto [q, r] : pairs)
    if (std::isfinite(r) && r != 2.0) o.r_exponents.push_back(r);
  auto prof = space_time_profile(d, o);
  CsvWriter w(c.file("generalized.csv"), "strichartz", {"datum_id", "q", "r", "gamma", "T", "lhs", "rhs", "ratio"});
  json ratios = json::array();
  bool finite = true;
  for (auto [q, r] : pairs) {
    auto rep = generalized_ratio(d, prof, q, r, datum_id(c.cfg.seed));
    for (const auto& s : rep.samples) w.row({s.datum_id, s.q, s.r, s.gamma, s.T, s.lhs, s.rhs, s.ratio});
    finite = finite && std::isfinite(rep.sup_ratio) && rep.sup_ratio > 0.0;
    ratios.push_back({{"q", num(q)}, {"r", num(r)}, {"ratio", num(rep.sup_ratio)}, {"tail_share", num(rep.tail_share)}});
  }
  c.check(8, "generalized ratios finite", finite, {{"T_max", tmax}, {"ratios", ratios}});
  auto e = generalized_ratio(d, prof, kInf, 2.0, datum_id(c.cfg.seed));
  for (const auto& s : e.samples) w.row({s.datum_id, s.q, s.r, s.gamma, s.T, s.lhs, s.rhs, s.ratio});
  c.check(8, "energy corner", std::abs(e.sup_ratio - 1.0) <= 1e-6,
          {{"ratio", num(e.sup_ratio)}, {"deviation", num(std::abs(e.sup_ratio - 1.0))}});
}

void interp(Context& c) {
  Tier t = tier_of(c);
  int nf = as_int(c.cfg.num("fields", by_tier(t, 20, 100, 100)));
  std::vector<double> deltas;
  if (c.cfg.params.contains("deltas")) deltas = c.cfg.list("deltas", {});
  else {
    double st = by_tier(t, 0.15, 0.05, 0.05);
    for (double x = 0.05; x <= 0.95 + 1e-9; x += st) deltas.push_back(std::round(x * 1e6) / 1e6);
  }
  CartesianGrid g{as_int(c.cfg.num("n", by_tier(t, 160, 320, 640))), c.cfg.num("h", by_tier(t, 0.2, 0.1, 0.05))};
  auto rep = interp_bound_check(deltas, nf, c.cfg.seed, g);
  {
    CsvWriter w(c.file("interp.csv"), "interp", {"field_id", "delta", "factor", "lhs", "hdot", "l2", "c_emp"});
    for (const auto& s : rep.samples) w.row({s.id, s.delta, s.factor, s.lhs, s.hdot, s.l2, s.c_emp});
  }
  json per = json::array();
  for (std::size_t i = 0; i < deltas.size(); ++i)
    per.push_back({{"delta", deltas[i]}, {"sup_c", num(rep.sup_by_delta[i])}, {"sup_c_refined", num(rep.sup_by_delta_refined[i])}});
  c.check(9, "interpolation constant bounded", rep.passed,
          {{"fields", nf}, {"grid", {{"n", g.n}, {"h", g.h}}}, {"sup_c", num(rep.sup_c)},
           {"refinement_change", num(rep.refinement_change)}, {"per_delta", per}});

  CartesianGrid gg{256, 0.1};
  CartesianField f(gg);
  for (int i = 0; i < gg.n; ++i)
    for (int j = 0; j < gg.n; ++j) f.at(i, j) = std::exp(-0.5 * (gg.x(i) * gg.x(i) + gg.x(j) * gg.x(j)));
  auto s = interp_sample(f, 0.5, "gaussian");
  double pi = std::numbers::pi;
  double exact = 1.0 / (interp_factor(0.5) * std::pow(pi * std::tgamma(3.0), 0.25) * std::pow(pi, 0.25));
  c.check(9, "gaussian closed form", std::abs(s.c_emp - exact) <= 1e-6,
          {{"c_emp", num(s.c_emp)}, {"exact", exact}, {"error", num(std::abs(s.c_emp - exact))}});
}

// seeded angular field: two Gaussian-profile harmonics, one of order k0
AngularSpectrumField family_field(const RadialGrid& g, std::uint64_t seed, int k0, int k_max) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> wd(0.8, 1.5);
  std::uniform_int_distribution<int> kd(-std::min(4, k_max), std::min(4, k_max));
  std::normal_distribution<double> nd;
  AngularSpectrumField f(g, k_max);
  int ks[2] = {k0, kd(rng)};
  for (int i = 0; i < 2; ++i) {
    double w = wd(rng);
    cplx a(nd(rng), nd(rng));
    if (i == 1) a *= 0.5;
    int k = std::abs(ks[i]);
    double peak = k == 0 ? 1.0 : std::pow(w * w * k, 0.5 * k) * std::exp(-0.5 * k);
    cplx* ch = f.channel(ks[i]);
    for (int j = 0; j < g.n_r; ++j) {
      double r = g.nodes[j];
      ch[j] += a * std::pow(r, k) * std::exp(-0.5 * r * r / (w * w)) / peak;
    }
  }
  return f;
}

void convolution(Context& c) {
  Tier t = tier_of(c);
  int nf = as_int(c.cfg.num("fields", by_tier(t, 2, 4, 8)));
  double sigma = c.cfg.num("sigma", 0.5);
  auto lambdas = c.cfg.list("lambdas", {1.0, 2.0, 4.0});
  RadialGrid rg(16.0, 256);
  CartesianGrid cg{256, 0.125};
  auto base = RadialProfile::gaussian(sigma);
  CsvWriter w(c.file("convolution.csv"), "convolution", {"field_id", "k", "lambda", "l1", "lhs", "f_norm", "ratio"});
  struct Row { std::string id; int k; double lambda; ConvolutionReport r; };
  std::vector<std::tuple<int, int, double>> jobs;
  for (int k : {0, 1, 4, 16})
    for (int i = 0; i < nf; ++i)
      for (double l : lambdas) jobs.emplace_back(k, i, l);
  std::vector<Row> rows(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t j) {
    auto [k, i, l] = jobs[j];
    std::uint64_t seed = c.cfg.seed * 7919 + 97 * k + i;
    auto f = family_field(rg, seed, k, std::max(k, 4));
    rows[j] = {"conv-" + std::to_string(k) + "-" + std::to_string(i), k, l, radial_convolution_bound(base.scaled(l), f, cg)};
  });
  double worst = 0.0;
  bool finite = true;
  for (const auto& r : rows) {
    w.row({r.id, (long long)r.k, r.lambda, r.r.l1, r.r.lhs, r.r.f_norm, r.r.ratio});
    finite = finite && std::isfinite(r.r.ratio);
    worst = std::max(worst, r.r.ratio);
  }
  c.check(10, "convolution constant finite", finite, {{"sigma", sigma}, {"lambdas", lambdas}, {"max_ratio", num(worst)}});
  auto m = radial_convolution_bound(RadialProfile::gaussian(0.05), family_field(rg, c.cfg.seed, 1, 4), cg);
  w.row({std::string("mollifier"), (long long)1, 1.0, m.l1, m.lhs, m.f_norm, m.ratio});
  c.check(10, "mollifier limit", std::abs(m.ratio - 1.0) <= 0.03, {{"sigma", 0.05}, {"ratio", num(m.ratio)}});
}

void leibniz(Context& c) {
  Tier t = tier_of(c);
  int np = as_int(c.cfg.num("pairs", by_tier(t, 3, 10, 20)));
  SobolevSpec spec{c.cfg.num("s", 0.5), c.cfg.num("b", 1.0)};
  RadialGrid rg(16.0, 256);
  CartesianGrid cg{256, 0.125};
  std::vector<LeibnizReport> reps(np);
  parallel_for(static_cast<std::size_t>(np), [&](std::size_t i) {
    std::uint64_t s = c.cfg.seed * 104729 + 2 * i;
    auto f = family_field(rg, s, static_cast<int>(i % 3), 4);
    auto g = family_field(rg, s + 1, static_cast<int>((i + 1) % 4), 4);
    reps[i] = leibniz_check(f, g, spec, cg);
  });
  CsvWriter w(c.file("leibniz.csv"), "leibniz", {"pair_id", "s", "b", "lhs", "rhs", "c_emp"});
  double worst = 0.0;
  bool finite = true;
  for (int i = 0; i < np; ++i) {
    w.row({"pair-" + std::to_string(i), spec.s, spec.b, reps[i].lhs, reps[i].rhs, reps[i].c_emp});
    finite = finite && std::isfinite(reps[i].c_emp);
    worst = std::max(worst, reps[i].c_emp);
  }
  c.check(10, "leibniz constant finite", finite, {{"s", spec.s}, {"b", spec.b}, {"max_c_emp", num(worst)}});
}

// ---------------------------------------------------------------- propagator

void propagator_crosscheck(Context& c) {
  Tier t = tier_of(c);
  int nd = as_int(c.cfg.num("data", by_tier(t, 2, 5, 5)));
  double tmax = c.cfg.num("t_max", 64.0);
  int km = as_int(c.cfg.num("k_max", 6));
  Route other = parse_route(c.cfg.str("route", "cartesian_fft"));
  int probes = as_int(c.cfg.num("probes", by_tier(t, 4, 10, 10)));
  RadialGrid grid(256.0, 2048);
  CsvWriter w(c.file("crosscheck.csv"), "crosscheck", {"datum_id", "check", "t", "r", "value"});
  double drift = 0.0, dist = 0.0;
  std::vector<double> times;
  for (double x = 0.0; x <= tmax + 1e-9; x += tmax / 8.0) times.push_back(x);
  for (int i = 0; i < nd; ++i) {
    std::uint64_t seed = c.cfg.seed + i;
    auto f = datum(seed, km).field(grid);
    auto out = propagate({f, times});
    double n0 = f.l2_norm();
    for (std::size_t j = 0; j < times.size(); ++j) {
      double d = std::abs(out[j].l2_norm() / n0 - 1.0);
      drift = std::max(drift, d);
      w.row({datum_id(seed), std::string("unitarity_drift"), times[j], 0.0, d});
    }
    PropagationPlan p{f, {10.0}};
    double d = compare_routes(p, Route::fourier_bessel, other, INFINITY);
    dist = std::max(dist, d);
    w.row({datum_id(seed), std::string("route_distance:") + route_name(other), 10.0, 0.0, d});
  }
  c.check(6, "unitarity", drift <= 1e-6, {{"t_max", tmax}, {"max_drift", num(drift)}});
  c.check(6, "route agreement", dist <= 1e-4, {{"route", route_name(other)}, {"max_distance", num(dist)}});

  auto d = datum(c.cfg.seed, 8);
  auto spec = d.spectrum(600.0);
  KernelFormOptions ko;
  std::vector<std::pair<double, double>> pts;
  const double ts[] = {1.0, 3.0, 8.0, 16.0, 32.0};
  const double rs[] = {2.0, 8.0};
  for (double tt : ts)
    for (double rr : rs)
      if (static_cast<int>(pts.size()) < probes) pts.emplace_back(tt, rr * (1.0 + tt / 16.0));
  std::vector<double> err(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    auto [tt, rr] = pts[i];
    auto terms = kernel_form_evaluate(spec, tt, rr, ko);
    double sum = 0.0;
    for (double v : terms) sum += v;
    auto u = propagate_spectrum(d.spectrum(grid.r_max + tt), tt, grid);
    double ref = 0.0;
    for (int k = -u.k_max; k <= u.k_max; ++k) ref += std::norm(grid.interpolate(u.channel(k), rr));
    ref *= 2.0 * std::numbers::pi;
    err[i] = std::abs(sum - ref) / ref;
  });
  double worst = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    w.row({datum_id(c.cfg.seed), std::string("kernel_identity"), pts[i].first, pts[i].second, err[i]});
    worst = std::max(worst, err[i]);
  }
  c.check(6, "kernel form identity", worst <= 1e-3, {{"probes", pts.size()}, {"max_relative_error", num(worst)}});
}

// ---------------------------------------------------------------- lifespan

LifespanConfig lifespan_config(const RunConfig& cfg, int p) {
  Tier t = cfg.tier;
  LifespanConfig l;
  l.p = p;
  l.grid.n = as_int(cfg.num("grid_n", by_tier(t, 128, 256, 256)));
  l.grid.length = cfg.num("length", by_tier(t, 64.0, 128.0, 128.0));
  l.horizon = cfg.num("horizon", by_tier(t, 10.0, 40.0, 40.0));
  l.width = cfg.num("width", 2.0);
  l.eps = cfg.list("eps", {0.6, 0.7, 0.8, 0.9, 1.0, 1.2});
  l.coef = cfg.num("coef", 0.0);
  return l;
}

void write_lifespan(Context& c, const std::string& name, const std::vector<LifespanRecord>& recs) {
  CsvWriter w(c.file(name), "lifespan", {"epsilon", "T_blow", "status", "final_norm", "dt_final"});
  for (const auto& r : recs) w.row({r.epsilon, r.T_blow, r.status, r.final_norm, r.dt_final});
}

json fit_json(const LineFit& f) {
  return {{"slope", num(f.slope)}, {"intercept", num(f.intercept)}, {"r2", num(f.r2)}, {"points", f.points}};
}

double max_rel_change(const std::vector<LifespanRecord>& a, const std::vector<LifespanRecord>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].finite() && b[i].finite()) m = std::max(m, std::abs(b[i].T_blow / a[i].T_blow - 1.0));
    else if (a[i].finite() != b[i].finite()) m = INFINITY;
  return m;
}

std::vector<LifespanRecord> rerun(const LifespanConfig& cfg, double coef) {
  std::vector<LifespanRecord> out(cfg.eps.size());
  parallel_for(cfg.eps.size(), [&](std::size_t i) { out[i] = lifespan_run(cfg, coef, cfg.eps[i]); });
  return out;
}

void lifespan(Context& c) {
  Tier t = tier_of(c);
  std::vector<int> ps = {3, 5};
  if (c.cfg.params.contains("p")) ps = {as_int(c.cfg.num("p", 3))};
  for (int p : ps) {
    LifespanConfig cfg = lifespan_config(c.cfg, p);
    auto rep = lifespan_sweep(cfg);
    std::string suffix = p == 3 ? "" : "_p" + std::to_string(p);
    write_lifespan(c, "lifespan" + suffix + ".csv", rep.records);
    {
      CsvWriter w(c.file("calibration" + suffix + ".csv"), "calibration", {"coef", "T", "finite"});
      for (const auto& s : rep.calibration) w.row({s.coef, s.T, (long long)s.finite});
    }
    json data = {{"p", p},
                 {"coef", rep.coef},
                 {"horizon", cfg.horizon},
                 {"grid", {{"n", cfg.grid.n}, {"length", cfg.grid.length}}},
                 {"fit_eps_minus_2", fit_json(rep.fit_eps2)},
                 {"fit_eps_minus_p_minus_1", fit_json(rep.fit_epsp)},
                 {"sweep_status", rep.status}};
    if (p == 3) {
      Status s = rep.status == "pass" ? Status::pass : (rep.status == "fail" ? Status::fail : Status::inconclusive);
      c.check(11, "lifespan fit", s, data);
      LifespanConfig half = cfg;
      half.solver.dt_max *= 0.5;
      half.solver.cfl *= 0.5;
      auto h = rerun(half, rep.coef);
      write_lifespan(c, "lifespan_half_dt.csv", h);
      double dh = max_rel_change(rep.records, h);
      c.check(11, "step halving stability", dh <= 0.02, {{"max_relative_change", num(dh)}});
      LifespanConfig thr = cfg;
      thr.solver.blow_factor = 1e4;
      auto th = rerun(thr, rep.coef);
      write_lifespan(c, "lifespan_threshold_1e4.csv", th);
      double dt4 = max_rel_change(rep.records, th);
      c.report.checks.push_back({0, "threshold variation", dt4 <= 0.03 ? Status::pass : Status::fail,
                                 {{"max_relative_change", num(dt4)}}});
      if (t == Tier::thorough) {
        LifespanConfig fine = cfg;
        fine.grid.n *= 2;
        fine.solver.dt_max *= 0.5;
        fine.solver.cfl *= 0.5;
        auto fr = rerun(fine, rep.coef);
        write_lifespan(c, "lifespan_refined.csv", fr);
        double df = max_rel_change(rep.records, fr);
        c.report.checks.push_back({0, "grid and step refinement", df <= 0.02 ? Status::pass : Status::fail,
                                   {{"max_relative_change", num(df)}}});
      }
    } else {
      bool favored = rep.fit_epsp.r2 > rep.fit_eps2.r2;
      Status s = rep.status == "inconclusive" ? Status::inconclusive : (favored ? Status::pass : Status::fail);
      c.check(11, "higher power comparison", s, data);
    }
  }
}

const std::map<std::string, std::function<void(Context&)>>& registry() {
  static const std::map<std::string, std::function<void(Context&)>> m = {
      {"kernel-verify", kernel_verify},
      {"keystep", keystep},
      {"dyadic-sum", dyadic_sum},
      {"propagator-crosscheck", propagator_crosscheck},
      {"strichartz-endpoint", strichartz_endpoint},
      {"strichartz-q", strichartz_q},
      {"generalized", generalized},
      {"interp", interp},
      {"convolution", convolution},
      {"leibniz", leibniz},
      {"lifespan", lifespan},
  };
  return m;
}


}  // namespace

json RunReport::to_json() const {
  json checks_j = json::array();
  for (const auto& c : checks)
    checks_j.push_back({{"criterion", c.criterion}, {"name", c.name}, {"status", status_name(c.status)}, {"data", c.data}});
  json j = {{"schema_version", "fblab.report/" + std::to_string(kSchemaVersion)},
            {"tool_version", kToolVersion},
            {"config", config.to_json()},
            {"status", status_name(status)},
            {"checks", checks_j},
            {"files", files},
            {"wall_seconds", wall_seconds}};
  if (!error.empty()) j["error"] = error;
  return j;
}

RunReport run(const RunConfig& config) {
  config.validate();
  RunReport rep;
  rep.config = config;
  fs::create_directories(config.out_dir);
  auto t0 = std::chrono::steady_clock::now();
  Context ctx{config, rep};
  try {
    registry().at(config.experiment)(ctx);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    rep.error = e.what();
  }
  rep.wall_seconds = seconds_since(t0);
  rep.status = rep.error.empty() ? Status::pass : Status::fail;
  for (const auto& c : rep.checks)
    if (c.criterion > 0) rep.status = combine(rep.status, c.status);
  write_json((fs::path(config.out_dir) / "report.json").string(), rep.to_json());
  return rep;
}

const std::vector<std::string>& criterion_titles() {
  static const std::vector<std::string> t = {
      "bessel dual-path agreement", "kernel symmetry",         "envelope certification",
      "keystep uniform bound",      "dyadic log-sum",          "propagator consistency",
      "endpoint strichartz ratio",  "non-endpoint estimates",  "interpolation inequality",
      "convolution and leibniz",    "lifespan experiment",     "determinism"};
  return t;
}

json SuiteReport::to_json() const {
  json crit = json::array();
  for (const auto& c : criteria)
    crit.push_back({{"id", c.id}, {"title", c.title}, {"status", status_name(c.status)},
                    {"seconds", c.seconds}, {"checks", c.checks}});
  json runs_j = json::array();
  for (const auto& r : runs)
    runs_j.push_back({{"experiment", r.config.experiment}, {"status", status_name(r.status)}, {"wall_seconds", r.wall_seconds},
                      {"error", r.error}});
  return {{"schema_version", "fblab.suite/" + std::to_string(kSchemaVersion)},
          {"tool_version", kToolVersion},
          {"tier", tier_name(tier)},
          {"seed", seed},
          {"status", status_name(status)},
          {"criteria", crit},
          {"runs", runs_j},
          {"wall_seconds", wall_seconds}};
}

SuiteReport suite(Tier tier, std::uint64_t seed, const std::string& out_dir) {
  static const std::map<std::string, std::vector<int>> owner = {
      {"kernel-verify", {1, 2, 3}}, {"keystep", {4}},       {"dyadic-sum", {5}},
      {"propagator-crosscheck", {6}}, {"strichartz-endpoint", {7}}, {"strichartz-q", {8}},
      {"generalized", {8}},         {"interp", {9}},        {"convolution", {10}},
      {"leibniz", {10}},            {"lifespan", {11}}};
  SuiteReport s;
  s.tier = tier;
  s.seed = seed;
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& name : experiment_names()) {
    RunConfig c;
    c.experiment = name;
    c.seed = seed;
    c.tier = tier;
    c.out_dir = (fs::path(out_dir) / name).string();
    s.runs.push_back(run(c));
  }
  for (int id = 1; id <= 11; ++id) {
    CriterionResult cr;
    cr.id = id;
    cr.title = criterion_titles()[id - 1];
    bool any = false;
    for (const auto& r : s.runs) {
      for (const auto& c : r.checks)
        if (c.criterion == id) {
          any = true;
          cr.status = combine(cr.status, c.status);
          cr.checks.push_back(c.name + ": " + status_name(c.status));
        }
      if (!r.error.empty()) {
        bool owns = false;
        for (const auto& c : r.checks) owns = owns || c.criterion == id;
        const auto& ids = owner.at(r.config.experiment);
        if (owns || std::find(ids.begin(), ids.end(), id) != ids.end()) {
          any = true;
          cr.status = Status::fail;
          cr.checks.push_back(r.config.experiment + " error: " + r.error);
        }
      }
    }
    for (const auto& r : s.runs) {
      const auto& ids = owner.at(r.config.experiment);
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) continue;
      double own = -1.0;
      for (const auto& c : r.checks)
        if (c.criterion == id && c.data.contains("seconds")) own = c.data["seconds"].get<double>();
      cr.seconds += own >= 0.0 ? own : r.wall_seconds;
    }
    if (!any) cr.status = Status::inconclusive;
    s.criteria.push_back(cr);
    s.status = combine(s.status, cr.status);
  }
  s.wall_seconds = seconds_since(t0);
  fs::create_directories(out_dir);
  write_json((fs::path(out_dir) / "suite.json").string(), s.to_json());
  return s;
}

}  // namespace fbl
