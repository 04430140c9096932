#include "ncosc/expectations.hpp"

#include <cmath>

#include "ncosc/errors.hpp"

namespace ncosc {

ChiValues chi_values(const EPSolution& ep, const BackgroundSpec& bg, double t) {
  const double sg = ep.sigma(t);
  const double sgd = ep.sigma_dot(t);
  const double a = coefficients(bg, t).a;
  return {Complex(1.0 / sg, sgd / a), Complex(1.0 / sg, -sgd / a)};
}

Observable observable_from_string(const std::string& name) {
  if (name == "x") return Observable::x;
  if (name == "y") return Observable::y;
  if (name == "px") return Observable::px;
  if (name == "py") return Observable::py;
  if (name == "x2") return Observable::x2;
  if (name == "y2") return Observable::y2;
  if (name == "px2") return Observable::px2;
  if (name == "py2") return Observable::py2;
  if (name == "xpy") return Observable::xpy;
  if (name == "ypx") return Observable::ypx;
  throw ConfigError("unknown observable: " + name);
}

std::string to_string(Observable kind) {
  switch (kind) {
    case Observable::x: return "x";
    case Observable::y: return "y";
    case Observable::px: return "px";
    case Observable::py: return "py";
    case Observable::x2: return "x2";
    case Observable::y2: return "y2";
    case Observable::px2: return "px2";
    case Observable::py2: return "py2";
    case Observable::xpy: return "xpy";
    case Observable::ypx: return "ypx";
  }
  return "?";
}

double mu_helper(double x, double y) { return std::sqrt((0.5 * x + 1.0) * (y - 1.0)); }

Complex matrix_element(Observable kind, int n, int m, int m_prime, double t,
                       const EPSolution& ep, const BackgroundSpec& bg,
                       const PhaseIntegral* phase) {
  if (n < 0 || m < 0 || m_prime < 0)
    throw DomainError("matrix_element: labels must be nonnegative");
  const double hbar = bg.constants.hbar;
  const double sg = ep.sigma(t);
  const ChiValues chi = chi_values(ep, bg, t);
  const double lam = phase ? phase->lambda(t) : 0.0;
  const Complex e_a1 = std::exp(Complex(0.0, lam));
  const Complex e_a2 = std::exp(Complex(0.0, 2.0 * lam));
  const double sq_h = std::sqrt(hbar);
  const bool up1 = m_prime == m + 1;
  const bool dn1 = m == m_prime + 1;
  const bool diag = m == m_prime;
  const bool up2 = m_prime == m + 2;
  const bool dn2 = m == m_prime + 2;
  const double sq2 = std::sqrt(2.0);

  switch (kind) {
    case Observable::x:
      if (up1) return Complex(0.0, 0.5 * sq_h * sg * std::sqrt(m_prime)) * e_a1;
      if (dn1) return Complex(0.0, -0.5 * sq_h * sg * std::sqrt(m)) * std::conj(e_a1);
      return {};
    case Observable::y:
      if (up1) return -0.5 * sq_h * sg * std::sqrt(m_prime) * e_a1;
      if (dn1) return -0.5 * sq_h * sg * std::sqrt(m) * std::conj(e_a1);
      return {};
    case Observable::px:
      if (up1) return 0.5 * sq_h * chi.chi_plus * std::sqrt(m_prime) * e_a1;
      if (dn1) return 0.5 * sq_h * chi.chi_minus * std::sqrt(m) * std::conj(e_a1);
      return {};
    case Observable::py:
      if (up1) return Complex(0.0, 0.5 * sq_h) * chi.chi_plus * std::sqrt(m_prime) * e_a1;
      if (dn1)
        return Complex(0.0, -0.5 * sq_h) * chi.chi_minus * std::sqrt(m) * std::conj(e_a1);
      return {};
    case Observable::x2:
    case Observable::y2: {
      const double sign = kind == Observable::x2 ? -1.0 : 1.0;
      if (diag) return 0.5 * hbar * (n + m + 1.0) * sg * sg;
      if (up2)
        return sign * hbar * sg * sg / (2.0 * sq2) * mu_helper(m, m_prime) * e_a2;
      if (dn2)
        return sign * hbar * sg * sg / (2.0 * sq2) * mu_helper(m_prime, m) *
               std::conj(e_a2);
      return {};
    }
    case Observable::px2:
    case Observable::py2: {
      const double sign = kind == Observable::px2 ? 1.0 : -1.0;
      if (diag)
        return 0.5 * hbar * (n + m + 1.0) * (chi.chi_plus * chi.chi_minus).real();
      if (up2)
        return sign * hbar * chi.chi_plus * chi.chi_plus / (2.0 * sq2) *
               mu_helper(m, m_prime) * e_a2;
      if (dn2)
        return sign * hbar * chi.chi_minus * chi.chi_minus / (2.0 * sq2) *
               mu_helper(m_prime, m) * std::conj(e_a2);
      return {};
    }
    case Observable::xpy:
    case Observable::ypx: {
      if (diag) {
        const double d = kind == Observable::xpy ? (m - n) : (n - m);
        return 0.5 * hbar * d;
      }
      if (up2)
        return -hbar * sg * chi.chi_plus / (2.0 * sq2) * mu_helper(m, m_prime) * e_a2;
      if (dn2)
        return -hbar * sg * chi.chi_minus / (2.0 * sq2) * mu_helper(m_prime, m) *
               std::conj(e_a2);
      return {};
    }
  }
  return {};
}

UncertaintyRecord assemble_record(const GaussianMomentCoeffs& k, double t,
                                  const EPSolution& ep, const BackgroundSpec& bg) {
  const double hbar = bg.constants.hbar;
  const double sg = ep.sigma(t);
  const double sgd = ep.sigma_dot(t);
  const double a = coefficients(bg, t).a;
  const BackgroundFields f = background_fields(bg, t);
  const double s2 = sg * sg;
  const double ds_over_a2 = (sgd / a) * (sgd / a);

  UncertaintyRecord r;
  r.t = t;
  r.var_x = 0.5 * hbar * s2 * k.s_x;
  r.var_y = 0.5 * hbar * s2 * k.s_y;
  r.var_px = 0.5 * hbar * (k.p_xa / s2 + k.p_xb * ds_over_a2);
  r.var_py = 0.5 * hbar * (k.p_ya / s2 + k.p_yb * ds_over_a2);

  const double th = f.theta, om = f.omega;
  r.var_X = r.var_x + 0.5 * th * k.shift_X +
            th * th / (8.0 * hbar) * (k.a_X / s2 + k.b_X * ds_over_a2);
  r.var_Y = r.var_y + 0.5 * th * k.shift_Y +
            th * th / (8.0 * hbar) * (k.a_Y / s2 + k.b_Y * ds_over_a2);
  r.var_PX = r.var_px + 0.5 * om * k.shift_PX + om * om / (8.0 * hbar) * s2 * k.c_PX;
  r.var_PY = r.var_py + 0.5 * om * k.shift_PY + om * om / (8.0 * hbar) * s2 * k.c_PY;

  r.prod_XY = std::sqrt(r.var_X * r.var_Y);
  r.prod_PxPy = std::sqrt(r.var_PX * r.var_PY);
  r.prod_XPx = std::sqrt(r.var_X * r.var_PX);
  r.bound_XY = 0.5 * std::abs(th);
  r.bound_PP = 0.5 * std::abs(om);
  r.bound_XP = 0.5 * hbar + th * om / (8.0 * hbar);
  return r;
}

UncertaintyRecord eigenstate_uncertainties(int n, int m, double t, const EPSolution& ep,
                                           const BackgroundSpec& bg) {
  if (n < 0 || m < 0) throw DomainError("eigenstate_uncertainties: n, m must be >= 0");
  const double K = n + m + 1.0;
  const double shift = n - m;
  GaussianMomentCoeffs k;
  k.s_x = k.s_y = K;
  k.p_xa = k.p_xb = k.p_ya = k.p_yb = K;
  k.shift_X = k.shift_Y = shift;
  k.a_X = k.b_X = k.a_Y = k.b_Y = K;
  k.shift_PX = k.shift_PY = shift;
  k.c_PX = k.c_PY = K;
  return assemble_record(k, t, ep, bg);
}

ThetaMinResult theta_min_analysis(double t, const EPSolution& ep,
                                  const BackgroundSpec& bg) {
  const double hbar = bg.constants.hbar;
  const double sg = ep.sigma(t);
  const double sgd = ep.sigma_dot(t);
  const double a = coefficients(bg, t).a;
  const double s2 = sg * sg;
  const double denom = a * a + s2 * sgd * sgd;
  ThetaMinResult out;
  out.theta_min = 2.0 * hbar * s2 * a * a / denom;
  out.f_min = hbar * s2 * s2 * sgd * sgd / (2.0 * denom);
  if (out.f_min < 0)
    throw NumericalError("theta_min_analysis: negative minimum value");
  return out;
}

double xy_gap_of_theta(double theta, double t, const EPSolution& ep,
                       const BackgroundSpec& bg) {
  const double hbar = bg.constants.hbar;
  const double sg = ep.sigma(t);
  const double sgd = ep.sigma_dot(t);
  const double a = coefficients(bg, t).a;
  const double P = 1.0 / (sg * sg) + (sgd / a) * (sgd / a);
  return 0.5 * hbar * sg * sg + theta * theta * P / (8.0 * hbar) - 0.5 * theta;
}

}  // namespace ncosc
