#pragma once

#include <vector>

namespace fbl {

struct KeystepOptions {
  std::vector<double> deltas = {0.0};  // weight <m>^{1 - 2 delta}
  double m_floor = 256.0;              // M_int = max(2r, m_floor)
  int nodes_per_unit = 8;              // Gauss nodes per unit m panel
  int psi_node_factor = 1;             // multiplies the default psi node count
  double tail_fraction = 0.01;
};

// norms for all orders 0..K at one radius; head[d][k] and the k-independent
// tail bound tail[d] for each weight exponent
struct KeystepTable {
  double r = 0.0;
  double m_int = 0.0;
  std::vector<double> deltas;
  std::vector<std::vector<double>> head;
  std::vector<double> tail;
  double upper(std::size_t d, int k) const;
};

KeystepTable keystep_table(int K, double r, const KeystepOptions& opts = {});

struct KeystepValue {
  double head = 0.0;
  double tail = 0.0;
  double upper = 0.0;  // sqrt(head^2 + tail^2)
};

// || psi_k(., r) <m>^{1/2 - delta} ||_{L^2_m}; throws WindowError when the
// tail bound exceeds the allowed fraction of the largest head over orders 0..|k|
KeystepValue keystep_norm(int k, double r, double delta = 0.0);

// certified bound on 2 int_{|m| > M} (2 pi sup_{|x| >= |m| - r} |hat_alpha(x)|)^2 <m>^{1 - 2 delta} dm
double keystep_tail_bound(double m_int, double r, double delta);

}  // namespace fbl
