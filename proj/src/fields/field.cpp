#include "fbl/fields/field.hpp"

#include <cmath>
#include <numbers>

#include "fbl/core/errors.hpp"
#include "fbl/simd/kernels.hpp"

namespace fbl {

AngularSpectrumField::AngularSpectrumField(RadialGrid grid_, int k_max_)
    : grid(std::move(grid_)), k_max(k_max_),
      coeffs(static_cast<std::size_t>(2 * k_max_ + 1) * grid.n_r, cplx(0.0, 0.0)) {
  if (k_max < 0) throw ConfigError("k_max must be nonnegative");
}

double AngularSpectrumField::l2theta_sq(int j) const {
  double s = 0.0;
  for (int k = -k_max; k <= k_max; ++k) s += std::norm(at(k, j));
  return 2.0 * std::numbers::pi * s;
}

double AngularSpectrumField::l2_norm() const {
  double s = 0.0;
  const auto& kern = simd::active();
  for (int k = -k_max; k <= k_max; ++k) s += kern.wnorm2(grid.weights_r.data(), channel(k), grid.n_r);
  return std::sqrt(2.0 * std::numbers::pi * s);
}

double AngularSpectrumField::reality_defect() const {
  double d = 0.0;
  for (int k = 0; k <= k_max; ++k)
    for (int j = 0; j < grid.n_r; ++j) d = std::max(d, std::abs(at(-k, j) - std::conj(at(k, j))));
  return d;
}

cplx AngularSpectrumField::value(double r, double theta) const {
  cplx s = 0.0;
  for (int k = -k_max; k <= k_max; ++k) s += grid.interpolate(channel(k), r) * std::polar(1.0, k * theta);
  return s;
}

AngularSpectrumField& AngularSpectrumField::operator+=(const AngularSpectrumField& o) {
  if (!(grid == o.grid) || k_max != o.k_max) throw ConfigError("field shapes differ");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

AngularSpectrumField& AngularSpectrumField::operator-=(const AngularSpectrumField& o) {
  if (!(grid == o.grid) || k_max != o.k_max) throw ConfigError("field shapes differ");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

AngularSpectrumField& AngularSpectrumField::operator*=(cplx s) {
  for (auto& c : coeffs) c *= s;
  return *this;
}

double relative_distance(const AngularSpectrumField& a, const AngularSpectrumField& b) {
  AngularSpectrumField d = a;
  d -= b;
  double nb = b.l2_norm();
  return nb > 0.0 ? d.l2_norm() / nb : d.l2_norm();
}

}  // namespace fbl
