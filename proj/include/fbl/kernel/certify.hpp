#pragma once

#include <vector>

#include "fbl/kernel/envelope.hpp"
#include "fbl/kernel/keystep.hpp"

namespace fbl {

struct EnvelopeGrid {
  int k_max = 64;
  std::vector<double> rs;                 // radii; m values are chosen per regime
  int N = 4;
  int psi_node_factor = 1;
  static EnvelopeGrid dyadic(int k_max, int j_lo, int j_hi);
};

// m samples for radius r: dense near |m| = r, geometric elsewhere
std::vector<double> envelope_m_samples(double r);

struct EnvelopeArgmax {
  int k = 0;
  double m = 0.0;
  double r = 0.0;
  double ratio = 0.0;
  double psi_abs = 0.0;
  double bound = 0.0;
  Regime regime = Regime::small_r_or_large_m;
};

struct EnvelopeCertificate {
  double c_star = 0.0;
  EnvelopeArgmax argmax;
  double regime_max[4] = {};
  std::vector<double> rs;
  std::vector<double> slice_max;       // max ratio at each radius
  double c_star_refined = 0.0;         // same grid, doubled quadrature nodes
  double refinement_delta = 0.0;       // relative change of C*
  double top_octave_change = 0.0;      // C* over all radii vs C* without the largest
  std::size_t samples = 0;
  bool passed = false;
};

EnvelopeCertificate certify_envelopes(const EnvelopeGrid& grid, bool refine = true);

// explicit samples (k, m, r); no stability statistics
EnvelopeCertificate certify_envelope_points(const std::vector<int>& ks, const std::vector<double>& ms,
                                            const std::vector<double>& rs, int N = 4);

struct KeystepGrid {
  int k_max = 256;
  std::vector<double> rs;
  std::vector<double> deltas = {0.0, 0.1, 0.25};
  static KeystepGrid dyadic(int k_max, int j_lo, int j_hi);
};

struct KeystepCertificate {
  std::vector<double> rs;
  std::vector<double> deltas;
  std::vector<std::vector<std::vector<double>>> norms;  // [delta][r][k]
  std::vector<std::vector<double>> tails;               // [delta][r]
  std::vector<double> sup;                              // per delta, over k and r
  int argmax_k = 0;
  double argmax_r = 0.0;
  std::vector<double> slice_sup;                        // delta = first entry, sup over k per r
  double last_over_median = 0.0;
  double sup_refined = 0.0;                             // doubled nodes at the arg-max radius
  double refinement_delta = 0.0;
  bool passed = false;
};

KeystepCertificate certify_keystep(const KeystepGrid& grid, bool refine = true);

}  // namespace fbl
