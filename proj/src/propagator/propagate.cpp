#include "fbl/propagator/propagate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fbl/core/errors.hpp"
#include "fbl/core/fft.hpp"
#include "fbl/core/parallel.hpp"
#include "fbl/fields/sobolev.hpp"
#include "fbl/propagator/kernel_form.hpp"

namespace fbl {

const char* route_name(Route r) {
  switch (r) {
    case Route::fourier_bessel: return "fourier_bessel";
    case Route::cartesian_fft: return "cartesian_fft";
    case Route::kernel_form: return "kernel_form";
  }
  return "unknown";
}

Route parse_route(const std::string& name) {
  if (name == "fourier_bessel") return Route::fourier_bessel;
  if (name == "cartesian_fft") return Route::cartesian_fft;
  if (name == "kernel_form") return Route::kernel_form;
  throw ConfigError("unknown route: " + name);
}

void PropagationPlan::validate() const {
  if (!(band_lo >= 0.0) || !(band_hi > band_lo)) throw ConfigError("invalid band");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0.0)) throw ConfigError("propagation times must be nonnegative");
    if (i > 0 && times[i] < times[i - 1]) throw ConfigError("propagation times must be sorted");
  }
}

double edge_mass_fraction(const AngularSpectrumField& f, double frac) {
  double edge = 0.0, total = 0.0;
  for (int j = 0; j < f.grid.n_r; ++j) {
    double m = f.l2theta_sq(j) * f.grid.weights_r[j];
    total += m;
    if (f.grid.nodes[j] >= frac * f.grid.r_max) edge += m;
  }
  return total > 0.0 ? edge / total : 0.0;
}

double support_radius(const AngularSpectrumField& f, double tol) {
  std::vector<double> m(f.grid.n_r);
  double total = 0.0;
  for (int j = 0; j < f.grid.n_r; ++j) total += m[j] = f.l2theta_sq(j) * f.grid.weights_r[j];
  double tail = 0.0;
  for (int j = f.grid.n_r - 1; j >= 0; --j) {
    tail += m[j];
    if (tail > tol * total) return j + 1 < f.grid.n_r ? f.grid.nodes[j + 1] : f.grid.r_max;
  }
  return 0.0;
}

AngularSpectrumField propagate_spectrum(const BandSpectrum& s, double t, const RadialGrid& grid) {
  BandSpectrum moved = s;
  for (int k = -s.k_max; k <= s.k_max; ++k)
    for (int i = 0; i < s.rho.size(); ++i) moved.at(k, i) *= std::polar(1.0, -t * s.rho.nodes[i]);
  return hankel_inverse(moved, grid);
}

CartesianField propagate_cartesian(const CartesianField& f, double t) {
  std::vector<cplx> spec = cartesian_spectrum(f);
  const int n = f.grid.n;
  for (int i = 0; i < n; ++i) {
    double a = f.grid.xi(i);
    for (int j = 0; j < n; ++j) {
      double b = f.grid.xi(j);
      spec[static_cast<std::size_t>(i) * n + j] *= std::polar(1.0, -t * std::hypot(a, b));
    }
  }
  return from_cartesian_spectrum(std::move(spec), f.grid);
}

namespace {

CartesianGrid plan_grid(const PropagationPlan& plan) {
  int n = plan.cartesian_n;
  if (n <= 0) {
    n = 64;
    while (n < 4.0 * plan.field.grid.r_max) n *= 2;
  }
  return default_cartesian_grid(plan.field.grid, n);
}

void check_cone(const AngularSpectrumField& out, double t, double r_data) {
  if (edge_mass_fraction(out) > 1e-10)
    throw TruncationError("propagated mass reached the outer 5% of the radial grid at t=" + std::to_string(t),
                          (t + r_data) / 0.95);
}

}  // namespace

std::vector<AngularSpectrumField> propagate(const PropagationPlan& plan) {
  plan.validate();
  std::vector<AngularSpectrumField> out;
  if (plan.times.empty()) return out;
  const RadialGrid& grid = plan.field.grid;
  double r_data = support_radius(plan.field);
  double t_max = plan.times.back();
  if (t_max + r_data > 0.95 * grid.r_max)
    throw TruncationError("light cone leaves the radial grid", (t_max + r_data) / 0.95);
  switch (plan.route) {
    case Route::fourier_bessel: {
      RhoGrid rho = RhoGrid::for_band(plan.band_lo, plan.band_hi, grid.r_max + t_max);
      BandSpectrum spec = hankel_forward(plan.field, rho);
      for (double t : plan.times) {
        out.push_back(propagate_spectrum(spec, t, grid));
        check_cone(out.back(), t, r_data);
      }
      break;
    }
    case Route::cartesian_fft: {
      CartesianField c = synthesize(plan.field, plan_grid(plan));
      for (double t : plan.times) {
        CartesianField moved = propagate_cartesian(c, t);
        out.push_back(analyze(moved, grid, plan.field.k_max, {.order = 8, .upsample = 2}));
        check_cone(out.back(), t, r_data);
      }
      break;
    }
    case Route::kernel_form: {
      if (plan.band_lo < 0.5 || plan.band_hi > 1.0) throw DomainError("kernel form needs data band limited to [1/2, 1]");
      KernelFormOptions opts;
      opts.s_max = plan.kernel_s_max;
      RhoGrid rho = RhoGrid::for_band(plan.band_lo, plan.band_hi, std::max(grid.r_max, opts.s_max) + t_max);
      TimeTransform tt = time_transform(hankel_forward(plan.field, rho), opts);
      for (double t : plan.times) {
        AngularSpectrumField f(grid, plan.field.k_max);
        parallel_for(static_cast<std::size_t>(grid.n_r), [&](std::size_t j) {
          auto a = kernel_form_coefficients(tt, t, grid.nodes[j]);
          for (int k = -f.k_max; k <= f.k_max; ++k) f.at(k, static_cast<int>(j)) = a[k + f.k_max];
        });
        out.push_back(std::move(f));
        check_cone(out.back(), t, r_data);
      }
      break;
    }
  }
  return out;
}

double compare_routes(const PropagationPlan& plan, Route a, Route b, double tol) {
  CartesianGrid g = plan_grid(plan);
  auto cart_outputs = [&](Route r) {
    std::vector<CartesianField> res;
    if (r == Route::cartesian_fft) {
      plan.validate();
      CartesianField c = synthesize(plan.field, g);
      for (double t : plan.times) res.push_back(propagate_cartesian(c, t));
    } else {
      PropagationPlan p = plan;
      p.route = r;
      for (const auto& f : propagate(p)) res.push_back(synthesize(f, g));
    }
    return res;
  };
  auto x = cart_outputs(a), y = cart_outputs(b);
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double num = 0.0, den = 0.0;
    for (std::size_t q = 0; q < x[i].v.size(); ++q) {
      num += std::norm(x[i].v[q] - y[i].v[q]);
      den += std::norm(y[i].v[q]);
    }
    worst = std::max(worst, den > 0.0 ? std::sqrt(num / den) : std::sqrt(num));
  }
  if (worst > tol)
    throw ConsistencyError(std::string("routes ") + route_name(a) + " and " + route_name(b) + " differ by " +
                           std::to_string(worst));
  return worst;
}

}  // namespace fbl
