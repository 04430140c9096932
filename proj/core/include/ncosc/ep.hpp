#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ncosc/background.hpp"
#include "ncosc/constants.hpp"
#include "ncosc/ode.hpp"

namespace ncosc {

enum class EPKind { ChielliniExponential, ChielliniRational, PinneySuperposition, Numeric };

std::string to_string(EPKind kind);

// An evaluable solution of the dissipative Ermakov-Pinney equation
//   sigma'' - (a'/a) sigma' + a b sigma = tau a^2 / sigma^3.
// Immutable and cheap to copy; closed-form kinds evaluate analytically,
// the numeric kind through the integrator's dense output.
class EPSolution {
 public:
  class Impl;

  EPKind kind() const;
  Interval validity() const;

  double sigma(double t) const;
  double sigma_dot(double t) const;
  double sigma_ddot(double t) const;

  // Residual tolerance this solution is certified against: 1e-10 for
  // closed forms, 1e-6 for numeric output.
  double residual_tolerance() const;

  const std::map<std::string, double>& params() const;

  explicit EPSolution(std::shared_ptr<const Impl> impl);

 private:
  std::shared_ptr<const Impl> impl_;
};

// Background + solution produced by one of the Chiellini constructions.
struct ChielliniFamily {
  BackgroundSpec background;  // DirectAB mode
  EPSolution solution;
  double kappa = 0;
};

// a = alpha e^{-gamma t}, b = beta e^{gamma t}, sigma = mu e^{-gamma t/2},
// mu^4 = tau alpha^2 / (alpha beta - kappa gamma^2) with kappa = 1/4.
// Requires alpha beta - gamma^2/4 > 0.
ChielliniFamily chiellini_exponential(double alpha, double beta, double gamma,
                                      const PhysicalConstants& pc);

// Rational family for g(sigma) = gamma sigma^n with kappa = (n+1)/(n+2)^2:
//   a = alpha ((n+2)/n)^{(n+2)/n} (mu - gamma t)^{-(n+2)/n}
//   b = beta (n/(n+2))^{2/n - 1}  (mu - gamma t)^{2/n - 1}
//   sigma = ((n+2)/n)^{1/n}       (mu - gamma t)^{-1/n}
// on t < mu/gamma. gamma must satisfy gamma^2 = (n+1)(alpha beta - tau alpha^2)/kappa
// to 1e-10 (relative); requires alpha beta > tau alpha^2.
ChielliniFamily chiellini_rational(int n, double alpha, double beta, double gamma,
                                   double mu, const PhysicalConstants& pc);

// Pinney superposition sigma = sqrt(u1^2 + tau a^2 u2^2 / W^2) from the
// fundamental pair of u'' + a b(t) u = 0, for constant a. The pair is
// (u1, u2) with u1(lo) = c1, u1'(lo) = 0, u2(lo) = 0, u2'(lo) = 1, so
// W = c1. When b is exponential with positive rate the J0/Y0 closed form
// is used instead of integrating. Throws DegeneracyError for c1 ~ 0.
EPSolution pinney_superposition(const TimeFamily& b_family, double a_const, double c1,
                                const PhysicalConstants& pc, Interval span,
                                double tolerance = 1e-12);

// Value of the J0/Y0 closed form for b = beta e^{gamma t}, a = alpha:
//   sigma^2 = (pi^2 alpha^2 tau / (gamma^2 c1^2)) Y0^2(x) + c1^2 J0^2(x),
//   x(t) = 2 sqrt(alpha beta) e^{gamma t / 2} / gamma.
double pinney_bessel_sigma(double t, double alpha, double beta, double gamma,
                           double c1, double tau);

// Adaptive integration of the EP equation over [grid.front(), grid.back()]
// from sigma(t0) = sigma0, sigma'(t0) = dsigma0. Throws SingularityError if
// sigma falls below 1e-8 or a(t) changes sign.
EPSolution integrate_ep(const BackgroundSpec& bg, double sigma0, double dsigma0,
                        const std::vector<double>& t_grid, double tolerance = 1e-10);

// |sigma'' - (a'/a) sigma' + a b sigma - tau a^2 / sigma^3| at t.
double ep_residual(const EPSolution& sol, const BackgroundSpec& bg, double t);

// Largest residual over n uniform probe times in the intersection of the
// solution's validity and [lo, hi].
double max_ep_residual(const EPSolution& sol, const BackgroundSpec& bg, double lo,
                       double hi, int n_probe = 200);

struct ChielliniCheck {
  double kappa = 0;     // mean pointwise estimate
  double residual = 0;  // max deviation from the mean across the probe grid
  bool integrable = false;
};

// Pointwise kappa(sigma) = (h/g)'(sigma) / g(sigma); integrable iff constant
// within 1e-8 across the probe grid.
ChielliniCheck check_chiellini(const std::function<double(double)>& g,
                               const std::function<double(double)>& h,
                               const std::vector<double>& probe_grid);

// Initial data used for runs on pre-selected (non-Chiellini) backgrounds
// when the configuration does not state any: the exponential family's
// sigma(0) = sqrt(5/3) and sigma'(0) = -sqrt(5/3) at gamma = 2.
inline constexpr double kDefaultSigma0 = 1.2909944487358056;
inline constexpr double kDefaultDSigma0 = -1.2909944487358056;

}  // namespace ncosc
