#pragma once

#include <vector>

namespace fbl {

struct Rule {
  std::vector<double> x;
  std::vector<double> w;
};

// n-point Gauss-Legendre rule on [-1, 1]
const Rule& gauss_legendre(int n);

// composite rule: `panels` equal panels of `per_panel` Gauss nodes on [a, b]
Rule composite_gauss(double a, double b, int panels, int per_panel);

// barycentric weights for interpolation through the nodes of gauss_legendre(n)
const std::vector<double>& gauss_barycentric(int n);

}  // namespace fbl
