#pragma once

#include <complex>
#include <optional>
#include <string>

#include "ncosc/expectations.hpp"

namespace ncosc {

// Glauber coherent state |alpha, t> = D(alpha, t)|0,0>. The uncertainty
// record equals the one of psi_{0,0} and is independent of alpha.
UncertaintyRecord glauber_uncertainties(Complex alpha, double t, const EPSolution& ep,
                                        const BackgroundSpec& bg);

struct FirstMoments {
  double x = 0, y = 0, px = 0, py = 0;
};

// <x> = -sqrt(hbar) sigma Im alpha, <y> = -sqrt(hbar) sigma Re alpha,
// <p_x> = sqrt(hbar)(Re alpha / sigma - sigma' Im alpha / a),
// <p_y> = -sqrt(hbar)(Im alpha / sigma + sigma' Re alpha / a).
FirstMoments glauber_first_moments(Complex alpha, double t, const EPSolution& ep,
                                   const BackgroundSpec& bg);

// Squeezed state |alpha, beta, t> = S(beta, t) D(alpha, t)|0,0> with
// S = exp[(beta/2)(a^2 - a^dag^2)]. y-type entries are the x-type ones at
// -beta. Reduces to the Glauber record bitwise at beta = 0.
UncertaintyRecord squeezed_uncertainties(Complex alpha, double beta, double t,
                                         const EPSolution& ep, const BackgroundSpec& bg);

// beta minimizing the auxiliary product Delta x Delta p_x:
//   beta_min = (1/2) ln[(a sqrt(a^2 + 8 sigma^2 sigma'^2) - a^2) / (4 sigma^2 sigma'^2)],
// 0 in the sigma' -> 0 limit.
double beta_min_aux(double t, const EPSolution& ep, const BackgroundSpec& bg);

enum class SqueezeTarget { XPx, XY, PxPy };

SqueezeTarget squeeze_target_from_string(const std::string& name);
std::string to_string(SqueezeTarget target);

struct BetaMinimum {
  double beta_star = 0;
  double value = 0;
};

// Scalar minimization over beta of the chosen squeezed noncommutative
// product at fixed t: a 64-point scan localizes the minimum, golden-section
// polishes it to 1e-8. Throws ConstraintError when the scan minimum sits on
// the bracket edge.
BetaMinimum minimize_beta_nc(SqueezeTarget target, double t, const EPSolution& ep,
                             const BackgroundSpec& bg, double bracket_lo,
                             double bracket_hi);

// Gaussian Klauder state |n, m0, phi0, s>: Gaussian superposition over m of
// the invariant eigenstates with envelope G(m, m0) = exp[-(m-m0)^2/(4 s^2)].
struct GaussianKlauderSpec {
  int n = 0;
  double m0 = 0;
  double phi0 = 0;
  double s = 0.5;
};

// Truncated sums entering the GK expectation values. S2(x, y) depends on x
// only through S2(x,y) = sum_k k G^2 + x N(y), so the identity
// S2(1,y) = S2(0,y) + N(y) holds exactly by construction.
struct GKSums {
  double S1 = 0;
  double S3 = 0;
  double N = 0;
  double sum_k_G2 = 0;  // S2(0, y)
  int truncation_terms = 0;

  double S2(double x) const { return sum_k_G2 + x * N; }
};

GKSums gk_sums(double m0, double s, double tail_tol = 1e-15);

struct GKMoments {
  double x = 0, y = 0, px = 0, py = 0;
  double x2 = 0, y2 = 0, px2 = 0, py2 = 0;
  double xpy = 0, ypx = 0;
};

// First and second moments per the GK expectation displays, with angles
// phi0 + Lambda and 2 phi0 + 2 Lambda.
GKMoments gk_moments(const GaussianKlauderSpec& spec, double t, const EPSolution& ep,
                     const BackgroundSpec& bg, const PhaseIntegral& phase);

UncertaintyRecord gk_uncertainties(const GaussianKlauderSpec& spec, double t,
                                   const EPSolution& ep, const BackgroundSpec& bg,
                                   const PhaseIntegral& phase);

// Record assembled from raw moments of an arbitrary state via the Bopp
// shift, e.g. Var X = Var x - (theta/hbar) Cov(x, p_y) + (theta^2/4hbar^2) Var p_y.
UncertaintyRecord record_from_moments(const GKMoments& m, double t,
                                      const BackgroundSpec& bg);

}  // namespace ncosc
