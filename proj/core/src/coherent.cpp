#include "ncosc/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ncosc/errors.hpp"
#include "ncosc/minimize.hpp"

namespace ncosc {

UncertaintyRecord glauber_uncertainties(Complex /*alpha*/, double t, const EPSolution& ep,
                                        const BackgroundSpec& bg) {
  // identical to the psi_{0,0} record and alpha-independent
  return eigenstate_uncertainties(0, 0, t, ep, bg);
}

FirstMoments glauber_first_moments(Complex alpha, double t, const EPSolution& ep,
                                   const BackgroundSpec& bg) {
  const double hbar = bg.constants.hbar;
  const double sg = ep.sigma(t);
  const double sgd = ep.sigma_dot(t);
  const double a = coefficients(bg, t).a;
  const double re = alpha.real(), im = alpha.imag();
  FirstMoments fm;
  fm.x = -std::sqrt(hbar) * sg * im;
  fm.y = -std::sqrt(hbar) * sg * re;
  fm.px = std::sqrt(hbar) * (re / sg - sgd * im / a);
  fm.py = -std::sqrt(hbar) * (im / sg + sgd * re / a);
  return fm;
}

UncertaintyRecord squeezed_uncertainties(Complex /*alpha*/, double beta, double t,
                                         const EPSolution& ep, const BackgroundSpec& bg) {
  const double ep_b = std::exp(beta);
  const double em_b = std::exp(-beta);
  const double ch = std::cosh(beta);
  const double plus = ep_b * ch;    // e^{beta} cosh(beta)
  const double minus = em_b * ch;   // e^{-beta} cosh(beta)
  const double shift_p = 0.5 * (1.0 - ep_b * ep_b);
  const double shift_m = 0.5 * (1.0 - em_b * em_b);

  GaussianMomentCoeffs k;
  k.s_x = plus;
  k.s_y = minus;
  k.p_xa = minus;
  k.p_xb = plus;
  k.p_ya = plus;
  k.p_yb = minus;
  k.shift_X = shift_p;
  k.a_X = plus;
  k.b_X = minus;
  k.shift_Y = shift_m;
  k.a_Y = minus;
  k.b_Y = plus;
  k.shift_PX = shift_p;
  k.c_PX = minus;
  k.shift_PY = shift_m;
  k.c_PY = plus;
  return assemble_record(k, t, ep, bg);
}

double beta_min_aux(double t, const EPSolution& ep, const BackgroundSpec& bg) {
  const double sg = ep.sigma(t);
  const double sgd = ep.sigma_dot(t);
  const double a = coefficients(bg, t).a;
  const double w = 4.0 * sg * sg * sgd * sgd;
  if (w < 1e-14 * a * a) return 0.0;
  return 0.5 * std::log((a * std::sqrt(a * a + 2.0 * w) - a * a) / w);
}

SqueezeTarget squeeze_target_from_string(const std::string& name) {
  if (name == "XPx") return SqueezeTarget::XPx;
  if (name == "XY") return SqueezeTarget::XY;
  if (name == "PxPy") return SqueezeTarget::PxPy;
  throw ConfigError("unknown squeeze target: " + name);
}

std::string to_string(SqueezeTarget target) {
  switch (target) {
    case SqueezeTarget::XPx: return "XPx";
    case SqueezeTarget::XY: return "XY";
    case SqueezeTarget::PxPy: return "PxPy";
  }
  return "?";
}

BetaMinimum minimize_beta_nc(SqueezeTarget target, double t, const EPSolution& ep,
                             const BackgroundSpec& bg, double bracket_lo,
                             double bracket_hi) {
  const auto product = [&](double beta) {
    const UncertaintyRecord r = squeezed_uncertainties({0, 0}, beta, t, ep, bg);
    switch (target) {
      case SqueezeTarget::XPx: return r.prod_XPx;
      case SqueezeTarget::XY: return r.prod_XY;
      case SqueezeTarget::PxPy: return r.prod_PxPy;
    }
    return r.prod_XPx;
  };
  const ScanResult scan = scan_minimum(product, bracket_lo, bracket_hi, 64);
  if (!scan.interior_min) {
    std::ostringstream os;
    os << "minimize_beta_nc(" << to_string(target)
       << "): scan minimum on the bracket edge, beta = " << scan.xs[scan.argmin]
       << ", value = " << scan.values[scan.argmin]
       << "; widen the bracket [" << bracket_lo << ", " << bracket_hi << "]";
    throw ConstraintError(os.str());
  }
  const MinimumResult min =
      golden_section(product, scan.xs[scan.argmin - 1], scan.xs[scan.argmin + 1], 1e-8);
  return {min.x, min.value};
}

GKSums gk_sums(double m0, double s, double tail_tol) {
  if (!(s > 0)) throw ConfigError("gk_sums: s must be > 0");
  if (m0 < 0) throw ConfigError("gk_sums: m0 must be >= 0");
  const auto G = [&](double k) { return std::exp(-(k - m0) * (k - m0) / (4.0 * s * s)); };
  GKSums sums;
  const int k_min = static_cast<int>(std::ceil(m0)) + 2;
  const int k_cap = k_min + 200 + static_cast<int>(80.0 * s);
  for (int k = 0; k <= k_cap; ++k) {
    const double g = G(k);
    const double g2 = g * g;
    sums.N += g2;
    sums.sum_k_G2 += k * g2;
    sums.S1 += std::sqrt(k + 1.0) * g * G(k + 1);
    sums.S3 += mu_helper(k, k + 2.0) * g * G(k + 2);
    sums.truncation_terms = k + 1;
    if (k >= k_min && g2 < tail_tol * std::max(sums.N, 1.0)) break;
  }
  return sums;
}

GKMoments gk_moments(const GaussianKlauderSpec& spec, double t, const EPSolution& ep,
                     const BackgroundSpec& bg, const PhaseIntegral& phase) {
  if (spec.n < 0) throw ConfigError("gk_moments: n must be >= 0");
  const double hbar = bg.constants.hbar;
  const double sg = ep.sigma(t);
  const double sgd = ep.sigma_dot(t);
  const double a = coefficients(bg, t).a;
  const GKSums sums = gk_sums(spec.m0, spec.s);
  const double lam = phase.lambda(t);
  const double phi1 = spec.phi0 + lam;        // phi0 + alpha_{0,1}
  const double phi2 = 2.0 * spec.phi0 + 2.0 * lam;  // 2 phi0 + alpha_{0,2}
  const double c1 = std::cos(phi1), s1 = std::sin(phi1);
  const double c2 = std::cos(phi2), s2 = std::sin(phi2);
  const double sq_h = std::sqrt(hbar);
  const double sq2 = std::sqrt(2.0);
  const double P = 1.0 / (sg * sg) + (sgd / a) * (sgd / a);
  const double S1_N = sums.S1 / sums.N;
  const double S3_N = sums.S3 / sums.N;

  GKMoments m;
  m.x = -sq_h * sg * s1 * S1_N;
  m.y = -sq_h * sg * c1 * S1_N;
  m.px = sq_h * (c1 / sg - sgd * s1 / a) * S1_N;
  m.py = -sq_h * (s1 / sg + sgd * c1 / a) * S1_N;

  const double s2n1 = sums.S2(spec.n + 1.0) / sums.N;
  const double s2mn = sums.S2(-static_cast<double>(spec.n)) / sums.N;
  m.x2 = 0.5 * hbar * sg * sg * (s2n1 - sq2 * c2 * S3_N);
  m.y2 = 0.5 * hbar * sg * sg * (s2n1 + sq2 * c2 * S3_N);
  const double p_cross =
      (1.0 / (sg * sg) - (sgd / a) * (sgd / a)) * c2 - 2.0 * sgd / (a * sg) * s2;
  m.px2 = 0.5 * hbar * (P * s2n1 + sq2 * p_cross * S3_N);
  m.py2 = 0.5 * hbar * (P * s2n1 - sq2 * p_cross * S3_N);
  const double ang_cross = sq2 * (sgd * sg / a * s2 - c2) * S3_N;
  m.xpy = 0.5 * hbar * (ang_cross + s2mn);
  m.ypx = 0.5 * hbar * (ang_cross - s2mn);
  return m;
}

UncertaintyRecord record_from_moments(const GKMoments& m, double t,
                                      const BackgroundSpec& bg) {
  const double hbar = bg.constants.hbar;
  const BackgroundFields f = background_fields(bg, t);
  const double th = f.theta, om = f.omega;

  UncertaintyRecord r;
  r.t = t;
  r.var_x = m.x2 - m.x * m.x;
  r.var_y = m.y2 - m.y * m.y;
  r.var_px = m.px2 - m.px * m.px;
  r.var_py = m.py2 - m.py * m.py;

  const double mean_X = m.x - 0.5 * th / hbar * m.py;
  const double mean_Y = m.y + 0.5 * th / hbar * m.px;
  const double mean_PX = m.px + 0.5 * om / hbar * m.y;
  const double mean_PY = m.py - 0.5 * om / hbar * m.x;
  const double X2 = m.x2 - th / hbar * m.xpy + 0.25 * th * th / (hbar * hbar) * m.py2;
  const double Y2 = m.y2 + th / hbar * m.ypx + 0.25 * th * th / (hbar * hbar) * m.px2;
  const double PX2 = m.px2 + om / hbar * m.ypx + 0.25 * om * om / (hbar * hbar) * m.y2;
  const double PY2 = m.py2 - om / hbar * m.xpy + 0.25 * om * om / (hbar * hbar) * m.x2;
  r.var_X = X2 - mean_X * mean_X;
  r.var_Y = Y2 - mean_Y * mean_Y;
  r.var_PX = PX2 - mean_PX * mean_PX;
  r.var_PY = PY2 - mean_PY * mean_PY;

  r.prod_XY = std::sqrt(r.var_X * r.var_Y);
  r.prod_PxPy = std::sqrt(r.var_PX * r.var_PY);
  r.prod_XPx = std::sqrt(r.var_X * r.var_PX);
  r.bound_XY = 0.5 * std::abs(th);
  r.bound_PP = 0.5 * std::abs(om);
  r.bound_XP = 0.5 * hbar + th * om / (8.0 * hbar);
  return r;
}

UncertaintyRecord gk_uncertainties(const GaussianKlauderSpec& spec, double t,
                                   const EPSolution& ep, const BackgroundSpec& bg,
                                   const PhaseIntegral& phase) {
  return record_from_moments(gk_moments(spec, t, ep, bg, phase), t, bg);
}

}  // namespace ncosc
