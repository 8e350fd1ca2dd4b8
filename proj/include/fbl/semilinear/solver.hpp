#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "fbl/fields/cartesian.hpp"

namespace fbl {

// P(u) (d_t u)^{a_t} (d_1 u)^{a_1} (d_2 u)^{a_2}, P(u) = sum_i poly[i] u^i
struct NonlinearTerm {
  std::array<int, 3> alpha{};
  std::vector<double> poly;
};

struct NonlinearitySpec {
  int p = 3;
  std::vector<NonlinearTerm> terms;
  void validate() const;
  bool is_zero() const;
  // coef (d_t u)^p
  static NonlinearitySpec dt_power(int p, double coef);
};

// periodic square [-L/2, L/2)^2 with n points per side
struct WaveGrid {
  int n = 256;
  double length = 128.0;
  double h() const { return length / n; }
  int half() const { return n / 2 + 1; }
  std::size_t spectral_size() const { return static_cast<std::size_t>(n) * half(); }
  double x(int i) const { return (i - n / 2) * h(); }
  double xi(int i) const;  // angular frequency of bin i along the full axis
};

// spectra of (u, d_t u) from the real 2-D FFT
struct WaveState {
  WaveGrid grid;
  double t = 0.0;
  std::vector<cplx> u, v;
};

struct SolverOptions {
  double dt_max = 0.1;
  double cfl = 0.05;         // dt <= cfl / (nonlinear rate)
  double c_cfl = 2.0;        // dt <= c_cfl / xi_max
  double dt_min = 1e-8;
  double blow_factor = 1e6;  // energy threshold relative to the initial value
  double s = 2.0;            // energy norm order
  double support_tol = 1e-12;  // data support threshold relative to the maximum
  double dealias = 0.0;      // retained fraction of each axis; 0 picks 2/3 for p = 3, 3/5 otherwise
  bool adaptive = true;
};

class WaveSolver {
 public:
  WaveSolver(WaveGrid grid, NonlinearitySpec spec, SolverOptions opts = {});

  WaveState initial(const std::vector<double>& u0, const std::vector<double>& u1) const;
  // one Lawson RK4 step with the linear part applied exactly; n_now is the
  // nonlinearity at the current state when already known
  void step(WaveState& s, double dt, const std::vector<cplx>* n_now = nullptr) const;
  // adaptive step size for the current state, capped by dt_max
  double stable_dt(const WaveState& s, std::vector<cplx>* n_out = nullptr) const;
  // dealiased spectrum of the nonlinearity and its rate coef |D|^{p-1}
  std::vector<cplx> nonlinear(const std::vector<cplx>& u, const std::vector<cplx>& v, double* rate) const;
  // ||(grad u, d_t u)||_{H^{s-1}}
  double energy(const WaveState& s) const;
  // max over the outer strip relative to `scale`
  double edge_ratio(const WaveState& s, double scale) const;
  double max_abs(const WaveState& s) const;
  // radius beyond which the data are below support_tol of the maximum
  double support_radius(const WaveState& s) const;
  // fixed step integration to t_end
  void advance(WaveState& s, double t_end, double dt) const;

  std::vector<double> to_physical(const std::vector<cplx>& spec) const;
  std::vector<cplx> to_spectral(const std::vector<double>& phys) const;

  const WaveGrid& grid() const { return grid_; }
  const NonlinearitySpec& spec() const { return spec_; }
  const SolverOptions& options() const { return opts_; }

 private:
  WaveGrid grid_;
  NonlinearitySpec spec_;
  SolverOptions opts_;
  std::vector<double> k_;  // |xi| per spectral bin
  std::vector<double> mask_;
  std::vector<double> ew_;  // energy weights with the half-spectrum multiplicity
  std::vector<double> kx_, ky_;
  double xi_max_ = 0.0;
};

struct LifespanRecord {
  double epsilon = 0.0;
  double T_blow = 0.0;       // time reached
  std::string status;        // blow-up, dt-collapse or horizon
  double final_norm = 0.0;   // energy relative to the initial value
  double dt_final = 0.0;
  long steps = 0;
  int grid_n = 0;
  double grid_length = 0.0;
  bool finite() const { return status != "horizon"; }
};

// integrates until blow-up, step collapse or the horizon; throws
// TruncationError when the light cone of the data reaches the boundary
LifespanRecord evolve_until_blowup(const WaveSolver& solver, WaveState s, double horizon);

// cos(t P) u0 + sin(t P) P^{-1} u1 and its time derivative
std::pair<CartesianField, CartesianField> linear_wave(const CartesianField& u0, const CartesianField& u1, double t);

// radial Gaussian of width w sampled on the grid
std::vector<double> gaussian_bump(const WaveGrid& g, double w, double lambda = 1.0);
// ||f||_{H^s} of real samples on the periodic grid
double periodic_sobolev(const WaveGrid& g, const std::vector<double>& f, double s);

}  // namespace fbl
