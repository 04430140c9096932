#pragma once

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "ncosc/background.hpp"
#include "ncosc/ep.hpp"

namespace ncosc {

using Complex = std::complex<double>;

// Eigenstate indices: the invariant eigenvalue is hbar (n + 1/2) and the
// angular momentum is hbar * ell with ell = m - n.
struct QuantumLabel {
  int n = 0;
  int m = 0;
  int ell() const { return m - n; }
};

// Lambda(t) = int_0^t (c(s) - a(s)/sigma(s)^2) ds, evaluated by adaptive
// quadrature with cumulative anchors every 0.25 time units so repeated
// queries stay cheap and the result is independent of query order.
class PhaseIntegral {
 public:
  PhaseIntegral(BackgroundSpec bg, EPSolution ep, double tol = 1e-13);

  double lambda(double t) const;

  // alpha_{n,ell}(t) = (n + ell) Lambda(t)
  double alpha(const QuantumLabel& label, double t) const;

 private:
  double anchor(long k) const;

  BackgroundSpec bg_;
  EPSolution ep_;
  double tol_;
  mutable std::map<long, double> anchors_;
  mutable std::mutex mutex_;
};

// Immutable bundle identifying one invariant eigenstate on one EP solution.
struct WaveState {
  QuantumLabel label;
  BackgroundSpec background;
  EPSolution ep;
  std::shared_ptr<const PhaseIntegral> phase;  // required only when with_phase is used

  const PhysicalConstants& constants() const { return background.constants; }
};

WaveState make_wave_state(QuantumLabel label, const BackgroundSpec& bg,
                          const EPSolution& ep);

// psi_{n,m-n}(r, theta) at time t, optionally dressed with e^{i alpha_{n,ell}(t)}.
Complex eval_state(const WaveState& ws, double r, double theta, double t,
                   bool with_phase = false);

struct StateDerivs {
  Complex psi, dpsi_dr, d2psi_dr2;
  // d/dtheta is i*ell*psi exactly
};

StateDerivs eval_state_derivs(const WaveState& ws, double r, double theta, double t,
                              bool with_phase = false);

// Radial Gauss nodes times a uniform angular grid, sized from the Gaussian
// length scale sqrt(hbar sigma^2) so the truncated tail is negligible.
struct PolarGrid {
  std::vector<double> r, wr;  // radial nodes and weights (including the r dr factor)
  std::vector<double> theta;  // uniform, weight 2 pi / N each
};

PolarGrid make_polar_grid(const WaveState& ws, double t, int n_radial = 96,
                          int n_angular = 64);

// Numerical <A|B> at time t over a shared grid; bare states (phases drop out
// of every modulus anyway). Throws QuadratureError when refining the radial
// rule moves the result by more than check_tol.
Complex orthonormality(const WaveState& a, const WaveState& b, double t,
                       double check_tol = 1e-8);

// Pointwise action of the ladder operators on the eigenfunction.
Complex apply_annihilation(const WaveState& ws, double r, double theta, double t);
Complex apply_creation(const WaveState& ws, double r, double theta, double t);

// Relative L2 norm of a_hat psi_{n,-n} over the grid; m must be 0.
double annihilation_residual(const WaveState& ws, const PolarGrid& grid, double t);

// Relative L2 norm of (I_hat - hbar(n + 1/2)) psi over the grid.
double invariant_residual(const WaveState& ws, const PolarGrid& grid, double t);

// Rayleigh quotient <psi|I_hat psi>/<psi|psi> over the grid.
double invariant_rayleigh(const WaveState& ws, const PolarGrid& grid, double t);

// Relative L2 norm of i hbar d_t psi - H(t) psi for the dressed state, with
// analytic spatial derivatives and a centered difference in t.
double schrodinger_residual(const WaveState& ws, const PolarGrid& grid, double t,
                            double dt, bool with_phase = true);

// Numerical normalization integral of |psi|^2 over the plane.
double state_norm(const WaveState& ws, double t, int n_radial = 96, int n_angular = 64);

}  // namespace ncosc
