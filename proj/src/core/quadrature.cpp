#include "fbl/core/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace fbl {

namespace {

Rule build_rule(int n) {
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) {
        p1 = x;
        p0 = 1.0;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    r.x[i] = -x;
    r.x[n - 1 - i] = x;
    r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  if (n % 2 == 1) r.x[n / 2] = 0.0;
  return r;
}

std::mutex cache_mutex;

}  // namespace

const Rule& gauss_legendre(int n) {
  static std::map<int, Rule> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

const std::vector<double>& gauss_barycentric(int n) {
  static std::map<int, std::vector<double>> cache;
  const Rule& r = gauss_legendre(n);
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<double> b(n);
  for (int i = 0; i < n; ++i) {
    b[i] = std::sqrt((1.0 - r.x[i] * r.x[i]) * r.w[i]) * ((i % 2) ? -1.0 : 1.0);
  }
  return cache.emplace(n, std::move(b)).first->second;
}

Rule composite_gauss(double a, double b, int panels, int per_panel) {
  const Rule& g = gauss_legendre(per_panel);
  Rule r;
  r.x.reserve(panels * per_panel);
  r.w.reserve(panels * per_panel);
  double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    double c = a + (p + 0.5) * width;
    for (int i = 0; i < per_panel; ++i) {
      r.x.push_back(c + 0.5 * width * g.x[i]);
      r.w.push_back(0.5 * width * g.w[i]);
    }
  }
  return r;
}

}  // namespace fbl
