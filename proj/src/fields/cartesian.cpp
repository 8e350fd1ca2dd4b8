#include "fbl/fields/cartesian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fbl/core/errors.hpp"
#include "fbl/core/fft.hpp"
#include "fbl/core/parallel.hpp"

namespace fbl {

double CartesianGrid::xi(int i) const {
  int k = i < n / 2 ? i : i - n;
  if (i == n / 2) k = -n / 2;
  return 2.0 * std::numbers::pi * k / (n * h);
}

double CartesianField::l2_norm() const {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s) * grid.h;
}

double CartesianField::max_abs() const {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

double CartesianField::boundary_ratio(int width) const {
  double mx = max_abs();
  if (mx == 0.0) return 0.0;
  double b = 0.0;
  int n = grid.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i < width || j < width || i >= n - width || j >= n - width) b = std::max(b, std::abs(at(i, j)));
  return b / mx;
}

CartesianField synthesize(const AngularSpectrumField& f, const CartesianGrid& g) {
  CartesianField out(g);
  const int P = f.grid.per_panel;
  const int K = f.k_max;
  parallel_for(static_cast<std::size_t>(g.n), [&](std::size_t row) {
    int i = static_cast<int>(row);
    std::vector<cplx> a(2 * K + 1);
    std::vector<double> w(P);
    for (int j = 0; j < g.n; ++j) {
      double x = g.x(i), y = g.x(j);
      double r = std::hypot(x, y);
      int panel;
      if (!f.grid.stencil(r, panel, w.data())) {
        out.at(i, j) = 0.0;
        continue;
      }
      cplx e1 = r > 0.0 ? cplx(x / r, y / r) : cplx(1.0, 0.0);
      cplx sum = 0.0;
      for (int k = -K; k <= K; ++k) {
        const cplx* c = f.channel(k) + panel * P;
        cplx s = 0.0;
        for (int q = 0; q < P; ++q) s += w[q] * c[q];
        a[k + K] = s;
      }
      // sum_k a_k e^{i k theta} with e^{i k theta} built by repeated products
      cplx pk = 1.0, nk = 1.0;
      sum = a[K];
      for (int k = 1; k <= K; ++k) {
        pk *= e1;
        nk *= std::conj(e1);
        sum += a[K + k] * pk + a[K - k] * nk;
      }
      out.at(i, j) = sum;
    }
  });
  return out;
}

std::vector<cplx> cartesian_spectrum(const CartesianField& f) {
  const int n = f.grid.n;
  std::vector<cplx> s = f.v;
  // x_i = (i - n/2) h; shifting the origin multiplies bin k by (-1)^k
  fft::c2c_2d(s, n, n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i + j) % 2) s[static_cast<std::size_t>(i) * n + j] = -s[static_cast<std::size_t>(i) * n + j];
  return s;
}

CartesianField from_cartesian_spectrum(std::vector<cplx> s, const CartesianGrid& g) {
  const int n = g.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i + j) % 2) s[static_cast<std::size_t>(i) * n + j] = -s[static_cast<std::size_t>(i) * n + j];
  fft::c2c_2d(s, n, n, +1);
  CartesianField out(g);
  double inv = 1.0 / (static_cast<double>(n) * n);
  for (std::size_t q = 0; q < s.size(); ++q) out.v[q] = s[q] * inv;
  return out;
}

CartesianField upsample(const CartesianField& f, int factor) {
  if (factor < 1) throw ConfigError("upsample factor must be >= 1");
  if (factor == 1) return f;
  const int n = f.grid.n, m = n * factor;
  std::vector<cplx> s = cartesian_spectrum(f);
  std::vector<cplx> big(static_cast<std::size_t>(m) * m, cplx(0.0, 0.0));
  auto map = [&](int i) { return i < n / 2 ? i : i - n + m; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cplx val = s[static_cast<std::size_t>(i) * n + j];
      // split the Nyquist bins symmetrically
      double scale = 1.0;
      if (i == n / 2) scale *= 0.5;
      if (j == n / 2) scale *= 0.5;
      val *= scale;
      int ii = map(i), jj = map(j);
      big[static_cast<std::size_t>(ii) * m + jj] += val;
      if (i == n / 2) big[static_cast<std::size_t>(i) * m + jj] += val;
      if (j == n / 2) big[static_cast<std::size_t>(ii) * m + j] += val;
      if (i == n / 2 && j == n / 2) big[static_cast<std::size_t>(i) * m + j] += val;
    }
  }
  CartesianGrid g{m, f.grid.h / factor};
  CartesianField out = from_cartesian_spectrum(std::move(big), g);
  double amp = static_cast<double>(factor) * factor;
  for (auto& z : out.v) z *= amp;
  return out;
}

AngularSpectrumField analyze(const CartesianField& fin, const RadialGrid& grid, int k_max,
                             const AnalyzeOptions& opts, AnalyzeDiagnostics* diag) {
  for (const auto& z : fin.v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("NaN in cartesian input");
  AnalyzeDiagnostics d;
  d.boundary_ratio = fin.boundary_ratio();
  d.truncation_warning = d.boundary_ratio > 1e-12;
  if (diag) *diag = d;

  CartesianField f = upsample(fin, opts.upsample);
  const int n = f.grid.n;
  const double h = f.grid.h;
  const int order = opts.order;
  int n_theta = opts.n_theta;
  if (n_theta <= 0) {
    n_theta = 16;
    while (n_theta < 2 * (2 * k_max + 1)) n_theta *= 2;
  }
  if (n_theta < 2 * k_max + 1) throw ConfigError("n_theta too small for k_max");

  // barycentric weights of equispaced Lagrange interpolation of this order
  std::vector<double> bw(order);
  for (int q = 0; q < order; ++q) {
    double b = 1.0;
    for (int l = 0; l < order; ++l)
      if (l != q) b /= (q - l);
    bw[q] = b;
  }

  AngularSpectrumField out(grid, k_max);
  parallel_for(static_cast<std::size_t>(grid.n_r), [&](std::size_t jr) {
    std::vector<cplx> ring(n_theta);
    std::vector<double> wx(order), wy(order);
    double r = grid.nodes[jr];
    auto weights = [&](double pos, int& base, std::vector<double>& w) {
      // pos in grid units; stencil base .. base+order-1 centered on pos
      double fl = std::floor(pos);
      base = static_cast<int>(fl) - (order / 2 - 1);
      double t = pos - base;
      double denom = 0.0;
      for (int q = 0; q < order; ++q) {
        double dd = t - q;
        if (dd == 0.0) {
          for (int l = 0; l < order; ++l) w[l] = l == q ? 1.0 : 0.0;
          return;
        }
        w[q] = bw[q] / dd;
        denom += w[q];
      }
      for (int q = 0; q < order; ++q) w[q] /= denom;
    };
    for (int l = 0; l < n_theta; ++l) {
      double th = 2.0 * std::numbers::pi * l / n_theta;
      double x = r * std::cos(th), y = r * std::sin(th);
      double px = x / h + n / 2, py = y / h + n / 2;
      int bx, by;
      weights(px, bx, wx);
      weights(py, by, wy);
      cplx s = 0.0;
      for (int a = 0; a < order; ++a) {
        int ix = bx + a;
        if (ix < 0 || ix >= n) continue;
        cplx row = 0.0;
        for (int b = 0; b < order; ++b) {
          int iy = by + b;
          if (iy < 0 || iy >= n) continue;
          row += wy[b] * f.at(ix, iy);
        }
        s += wx[a] * row;
      }
      ring[l] = s;
    }
    fft::c2c_1d(ring, -1);
    double inv = 1.0 / n_theta;
    for (int k = -k_max; k <= k_max; ++k) out.at(k, static_cast<int>(jr)) = ring[(k + n_theta) % n_theta] * inv;
  });
  return out;
}

}  // namespace fbl
