#pragma once

#include <vector>

#include "fbl/fields/cartesian.hpp"
#include "fbl/fields/field.hpp"
#include "fbl/fields/hankel.hpp"

namespace fbl {

enum class Route { fourier_bessel, cartesian_fft, kernel_form };

const char* route_name(Route r);
Route parse_route(const std::string& name);

struct PropagationPlan {
  AngularSpectrumField field;
  std::vector<double> times;
  Route route = Route::fourier_bessel;
  double band_lo = 0.5;  // radial frequency support of the datum
  double band_hi = 1.0;
  int cartesian_n = 0;   // 0 picks 4 r_max points per side, rounded to a power of two
  double kernel_s_max = 512.0;  // time-convolution window of the kernel form route
  void validate() const;
};

// e^{-itP} applied to plan.field at every plan time; outputs share the input grid.
// Throws TruncationError when the output carries mass within 5% of r_max.
std::vector<AngularSpectrumField> propagate(const PropagationPlan& plan);

// the same on a precomputed radial spectrum
AngularSpectrumField propagate_spectrum(const BandSpectrum& s, double t, const RadialGrid& grid);

// periodic Cartesian route: multiply the 2-D transform by e^{-it|xi|}
CartesianField propagate_cartesian(const CartesianField& f, double t);

// squared-mass fraction of f in [frac r_max, r_max]
double edge_mass_fraction(const AngularSpectrumField& f, double frac = 0.95);

// smallest radius outside which f carries at most tol of its squared mass
double support_radius(const AngularSpectrumField& f, double tol = 1e-12);

// throws ConsistencyError when two routes differ by more than tol in relative
// L2 on the Cartesian grid; returns the distance
double compare_routes(const PropagationPlan& plan, Route a, Route b, double tol);

}  // namespace fbl
