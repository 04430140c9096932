#pragma once

#include <complex>
#include <string>

#include "ncosc/background.hpp"
#include "ncosc/ep.hpp"
#include "ncosc/states.hpp"

namespace ncosc {

// chi_pm = 1/sigma +- i sigma'/a
struct ChiValues {
  Complex chi_plus, chi_minus;
};

ChiValues chi_values(const EPSolution& ep, const BackgroundSpec& bg, double t);

enum class Observable { x, y, px, py, x2, y2, px2, py2, xpy, ypx };

Observable observable_from_string(const std::string& name);
std::string to_string(Observable kind);

// mu(x, y) = sqrt((x/2 + 1)(y - 1)), the helper entering the second-moment
// matrix elements.
double mu_helper(double x, double y);

// Closed-form matrix element <n,m-n| O |n,m'-n> of the dressed states at
// time t. Zero unless |m - m'| matches the selection rule (1 for linear
// kinds, 0 or 2 for quadratic ones). Pass phase = nullptr for the bare
// (Lambda = 0) elements.
Complex matrix_element(Observable kind, int n, int m, int m_prime, double t,
                       const EPSolution& ep, const BackgroundSpec& bg,
                       const PhaseIntegral* phase);

// Variances, uncertainty products and time-dependent lower bounds for the
// auxiliary variables x, y, p_x, p_y and the noncommutative X, Y, P_x, P_y.
struct UncertaintyRecord {
  double t = 0;
  double var_x = 0, var_y = 0, var_px = 0, var_py = 0;
  double var_X = 0, var_Y = 0, var_PX = 0, var_PY = 0;
  double prod_XY = 0, prod_PxPy = 0, prod_XPx = 0;
  double bound_XY = 0;  // |theta|/2
  double bound_PP = 0;  // |Omega|/2
  double bound_XP = 0;  // hbar/2 + theta Omega / (8 hbar)
};

// Number of numeric columns streamed to CSV, t included.
inline constexpr int kRecordColumns = 15;

// Coefficient set reducing the eigenstate, Glauber and squeezed variance
// formulas to one shared assembly, so states whose records coincide on
// paper coincide bitwise here.
struct GaussianMomentCoeffs {
  double s_x = 1, s_y = 1;            // var_q = (hbar/2) sigma^2 s_q
  double p_xa = 1, p_xb = 1;          // var_pq = (hbar/2)(p_qa / sigma^2 + p_qb sigma'^2/a^2)
  double p_ya = 1, p_yb = 1;
  double shift_X = 0, shift_Y = 0;    // var_Q += (theta/2) shift_Q + ...
  double a_X = 1, b_X = 1;            //   ... + (theta^2/(8 hbar)) (a_Q/sigma^2 + b_Q sigma'^2/a^2)
  double a_Y = 1, b_Y = 1;
  double shift_PX = 0, shift_PY = 0;  // var_PQ += (Omega/2) shift_PQ + (Omega^2/(8 hbar)) sigma^2 c_PQ
  double c_PX = 1, c_PY = 1;
};

UncertaintyRecord assemble_record(const GaussianMomentCoeffs& k, double t,
                                  const EPSolution& ep, const BackgroundSpec& bg);

// Record for the invariant eigenstate psi_{n,m-n}:
//   var_x = var_y = (hbar/2)(n+m+1) sigma^2
//   var_px = var_py = (hbar/2)(n+m+1)(1/sigma^2 + sigma'^2/a^2)
// plus the (n-m) theta/2 and (n-m) Omega/2 shifted noncommutative entries.
UncertaintyRecord eigenstate_uncertainties(int n, int m, double t, const EPSolution& ep,
                                           const BackgroundSpec& bg);

struct ThetaMinResult {
  double theta_min = 0;
  double f_min = 0;
};

// Minimizer of f[theta] = (Delta X Delta Y)|_{psi_00} - theta/2 over theta:
//   theta_min = 2 hbar sigma^2 a^2 / (a^2 + sigma^2 sigma'^2)
//   f[theta_min] = hbar sigma^4 sigma'^2 / (2 a^2 + 2 sigma^2 sigma'^2) >= 0.
ThetaMinResult theta_min_analysis(double t, const EPSolution& ep, const BackgroundSpec& bg);

// f[theta] at an arbitrary trial theta (used to cross-check theta_min).
double xy_gap_of_theta(double theta, double t, const EPSolution& ep,
                       const BackgroundSpec& bg);

}  // namespace ncosc
