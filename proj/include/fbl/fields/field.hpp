#pragma once

#include <complex>
#include <vector>

#include "fbl/fields/radial_grid.hpp"

namespace fbl {

using cplx = std::complex<double>;

// f(r, theta) = sum_{|k| <= k_max} a_k(r) e^{i k theta}, with a_k sampled on
// the radial grid nodes.
struct AngularSpectrumField {
  AngularSpectrumField() = default;
  AngularSpectrumField(RadialGrid grid, int k_max);

  RadialGrid grid;
  int k_max = 0;
  std::vector<cplx> coeffs;  // (k + k_max) * n_r + j

  cplx* channel(int k) { return coeffs.data() + static_cast<std::size_t>(k + k_max) * grid.n_r; }
  const cplx* channel(int k) const {
    return coeffs.data() + static_cast<std::size_t>(k + k_max) * grid.n_r;
  }
  cplx& at(int k, int j) { return channel(k)[j]; }
  cplx at(int k, int j) const { return channel(k)[j]; }

  // squared L2_theta norm at radial node j: 2pi sum_k |a_k(r_j)|^2
  double l2theta_sq(int j) const;
  double l2_norm() const;
  // max |a_{-k} - conj(a_k)| over all channels and nodes
  double reality_defect() const;
  // value at a point given in polar coordinates
  cplx value(double r, double theta) const;

  AngularSpectrumField& operator+=(const AngularSpectrumField& o);
  AngularSpectrumField& operator-=(const AngularSpectrumField& o);
  AngularSpectrumField& operator*=(cplx s);
};

// relative L2 distance |a - b| / |b|
double relative_distance(const AngularSpectrumField& a, const AngularSpectrumField& b);

// field with a single harmonic e^{i k theta} g(r)
template <class F>
AngularSpectrumField single_harmonic(const RadialGrid& grid, int k_max, int k, F&& g) {
  AngularSpectrumField f(grid, k_max);
  for (int j = 0; j < grid.n_r; ++j) f.at(k, j) = g(grid.nodes[j]);
  return f;
}

}  // namespace fbl
