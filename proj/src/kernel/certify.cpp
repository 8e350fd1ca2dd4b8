#include "fbl/kernel/certify.hpp"

#include <algorithm>
#include <cmath>

#include "fbl/core/parallel.hpp"
#include "fbl/kernel/psi.hpp"
#include "fbl/specfun/bump.hpp"

namespace fbl {

EnvelopeGrid EnvelopeGrid::dyadic(int k_max, int j_lo, int j_hi) {
  EnvelopeGrid g;
  g.k_max = k_max;
  for (int j = j_lo; j <= j_hi; ++j) g.rs.push_back(std::ldexp(1.0, j));
  return g;
}

KeystepGrid KeystepGrid::dyadic(int k_max, int j_lo, int j_hi) {
  KeystepGrid g;
  g.k_max = k_max;
  for (int j = j_lo; j <= j_hi; ++j) g.rs.push_back(std::ldexp(1.0, j));
  return g;
}

std::vector<double> envelope_m_samples(double r) {
  double cap = hat_alpha_table().m_max() - r;
  std::vector<double> ms;
  auto add = [&](double m) {
    if (m >= 0.0 && m <= cap) ms.push_back(m);
  };
  if (r <= 1.0) {
    add(0.0);
    for (double m = 0.25; m <= 256.0; m *= 2.0) add(m);
    for (double m = 0.0; m <= 4.0; m += 0.125) add(m);
  } else {
    for (int i = 0; i <= 8; ++i) add(0.5 * r * i / 8.0);
    add(0.5 * r);
    for (double s = 0.0; r - 1.0 - s > 0.5 * r; s = s == 0.0 ? 0.25 : 2.0 * s) add(r - 1.0 - s);
    for (double u = 0.125; u < 4.0; u += 0.125) add(r - 1.0 + u);
    for (double s = 4.0; r + s < 2.0 * r; s *= 2.0) add(r + s);
    for (double f : {1.0, 1.25, 1.5, 2.0, 3.0, 4.0}) add(2.0 * r * f);
  }
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<double> both;
  for (double m : ms) {
    both.push_back(m);
    if (m > 0.0) both.push_back(-m);
  }
  return both;
}

namespace {

struct Sample {
  double m, r;
};

struct SampleResult {
  double best = 0.0;
  EnvelopeArgmax arg;
  double regime[4] = {};
};

SampleResult evaluate(const Sample& s, int k_max, int N, int factor, const std::vector<int>* only) {
  SampleResult out;
  int K = k_max;
  std::vector<cplx> v(K + 1);
  psi_all_orders(K, s.m, s.r, v.data(), psi_nodes(K, s.r) * factor);
  for (int k = 0; k <= K; ++k) {
    if (only && std::find(only->begin(), only->end(), k) == only->end()) continue;
    auto e = envelope(k, s.m, s.r, N);
    double ratio = std::abs(v[k]) / e.bound_value;
    int g = static_cast<int>(e.regime);
    out.regime[g] = std::max(out.regime[g], ratio);
    if (ratio > out.best) {
      out.best = ratio;
      out.arg = {k, s.m, s.r, ratio, std::abs(v[k]), e.bound_value, e.regime};
    }
  }
  return out;
}

struct Sweep {
  double c_star = 0.0;
  EnvelopeArgmax arg;
  double regime[4] = {};
  std::vector<double> slice;
  std::size_t samples = 0;
};

Sweep sweep(const std::vector<double>& rs, int k_max, int N, int factor) {
  std::vector<Sample> samples;
  std::vector<std::size_t> slice_of;
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (double m : envelope_m_samples(rs[i])) {
      samples.push_back({m, rs[i]});
      slice_of.push_back(i);
    }
  std::vector<SampleResult> res(samples.size());
  parallel_for(samples.size(), [&](std::size_t i) { res[i] = evaluate(samples[i], k_max, N, factor, nullptr); });
  Sweep s;
  s.slice.assign(rs.size(), 0.0);
  s.samples = samples.size() * (k_max + 1);
  for (std::size_t i = 0; i < res.size(); ++i) {
    if (res[i].best > s.c_star) {
      s.c_star = res[i].best;
      s.arg = res[i].arg;
    }
    for (int g = 0; g < 4; ++g) s.regime[g] = std::max(s.regime[g], res[i].regime[g]);
    s.slice[slice_of[i]] = std::max(s.slice[slice_of[i]], res[i].best);
  }
  return s;
}

}  // namespace

EnvelopeCertificate certify_envelopes(const EnvelopeGrid& grid, bool refine) {
  EnvelopeCertificate c;
  Sweep s = sweep(grid.rs, grid.k_max, grid.N, grid.psi_node_factor);
  c.c_star = s.c_star;
  c.argmax = s.arg;
  std::copy(s.regime, s.regime + 4, c.regime_max);
  c.rs = grid.rs;
  c.slice_max = s.slice;
  c.samples = s.samples;
  if (refine) {
    Sweep f = sweep(grid.rs, grid.k_max, grid.N, 2 * grid.psi_node_factor);
    c.c_star_refined = f.c_star;
    c.refinement_delta = std::abs(f.c_star - s.c_star) / s.c_star;
  }
  if (c.slice_max.size() >= 2) {
    double below = *std::max_element(c.slice_max.begin(), c.slice_max.end() - 1);
    c.top_octave_change = c.c_star / below - 1.0;
  }
  c.passed = std::isfinite(c.c_star) && c.top_octave_change <= 0.1 && (!refine || c.refinement_delta <= 0.005);
  return c;
}

EnvelopeCertificate certify_envelope_points(const std::vector<int>& ks, const std::vector<double>& ms,
                                            const std::vector<double>& rs, int N) {
  EnvelopeCertificate c;
  int k_max = 0;
  for (int k : ks) k_max = std::max(k_max, std::abs(k));
  std::vector<int> abs_ks;
  for (int k : ks) abs_ks.push_back(std::abs(k));
  for (double r : rs)
    for (double m : ms) {
      auto res = evaluate({m, r}, k_max, N, 1, &abs_ks);
      if (c.samples == 0 || res.best > c.c_star) {
        c.c_star = res.best;
        c.argmax = res.arg;
      }
      for (int g = 0; g < 4; ++g) c.regime_max[g] = std::max(c.regime_max[g], res.regime[g]);
      c.samples += ks.size();
    }
  c.rs = rs;
  c.passed = std::isfinite(c.c_star);
  return c;
}

KeystepCertificate certify_keystep(const KeystepGrid& grid, bool refine) {
  KeystepCertificate c;
  c.rs = grid.rs;
  c.deltas = grid.deltas;
  std::size_t nd = grid.deltas.size(), nr = grid.rs.size();
  c.norms.assign(nd, std::vector<std::vector<double>>(nr));
  c.tails.assign(nd, std::vector<double>(nr));
  KeystepOptions opts;
  opts.deltas = grid.deltas;
  for (std::size_t i = 0; i < nr; ++i) {
    auto t = keystep_table(grid.k_max, grid.rs[i], opts);
    for (std::size_t d = 0; d < nd; ++d) {
      c.tails[d][i] = t.tail[d];
      for (int k = 0; k <= grid.k_max; ++k) c.norms[d][i].push_back(t.upper(d, k));
    }
  }
  c.sup.assign(nd, 0.0);
  c.slice_sup.assign(nr, 0.0);
  for (std::size_t d = 0; d < nd; ++d)
    for (std::size_t i = 0; i < nr; ++i)
      for (int k = 0; k <= grid.k_max; ++k) {
        double v = c.norms[d][i][k];
        if (v > c.sup[d]) {
          c.sup[d] = v;
          if (d == 0) {
            c.argmax_k = k;
            c.argmax_r = grid.rs[i];
          }
        }
        if (d == 0) c.slice_sup[i] = std::max(c.slice_sup[i], v);
      }
  std::vector<double> sorted = c.slice_sup;
  std::sort(sorted.begin(), sorted.end());
  double median = sorted.empty() ? 0.0
                  : sorted.size() % 2 ? sorted[sorted.size() / 2]
                                      : 0.5 * (sorted[sorted.size() / 2 - 1] + sorted[sorted.size() / 2]);
  if (median > 0.0) c.last_over_median = c.slice_sup.back() / median;
  if (refine && nr > 0) {
    KeystepOptions fine;
    fine.deltas = {grid.deltas.front()};
    fine.nodes_per_unit = 2 * opts.nodes_per_unit;
    fine.psi_node_factor = 2;
    auto t = keystep_table(grid.k_max, c.argmax_r, fine);
    c.sup_refined = t.upper(0, c.argmax_k);
    c.refinement_delta = std::abs(c.sup_refined - c.sup[0]) / c.sup[0];
  }
  c.passed = std::all_of(c.sup.begin(), c.sup.end(), [](double v) { return std::isfinite(v); }) &&
             c.last_over_median <= 1.2 && (!refine || c.refinement_delta <= 0.005);
  return c;
}

}  // namespace fbl
