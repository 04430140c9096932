#include "ncosc/states.hpp"

#include <cmath>

#include "ncosc/errors.hpp"
#include "ncosc/quadrature.hpp"
#include "ncosc/special_functions.hpp"

namespace ncosc {

namespace {
constexpr double kAnchorSpacing = 0.25;
}

PhaseIntegral::PhaseIntegral(BackgroundSpec bg, EPSolution ep, double tol)
    : bg_(std::move(bg)), ep_(std::move(ep)), tol_(tol) {
  anchors_[0] = 0.0;
}

double PhaseIntegral::anchor(long k) const {
  // assumes mutex_ held
  auto it = anchors_.find(k);
  if (it != anchors_.end()) return it->second;
  const auto integrand = [this](double s) {
    const Coefficients co = coefficients(bg_, s);
    const double sg = ep_.sigma(s);
    return co.c - co.a / (sg * sg);
  };
  double acc;
  if (k > 0) {
    acc = anchor(k - 1) +
          adaptive_quad(integrand, (k - 1) * kAnchorSpacing, k * kAnchorSpacing, tol_);
  } else {
    acc = anchor(k + 1) -
          adaptive_quad(integrand, k * kAnchorSpacing, (k + 1) * kAnchorSpacing, tol_);
  }
  anchors_[k] = acc;
  return acc;
}

double PhaseIntegral::lambda(double t) const {
  std::lock_guard<std::mutex> lock(mutex_);
  const long k = static_cast<long>(std::floor(t / kAnchorSpacing));
  const double base = anchor(k);
  const double t_anchor = k * kAnchorSpacing;
  if (t == t_anchor) return base;
  const auto integrand = [this](double s) {
    const Coefficients co = coefficients(bg_, s);
    const double sg = ep_.sigma(s);
    return co.c - co.a / (sg * sg);
  };
  return base + adaptive_quad(integrand, t_anchor, t, tol_);
}

double PhaseIntegral::alpha(const QuantumLabel& label, double t) const {
  return (label.n + label.ell()) * lambda(t);
}

WaveState make_wave_state(QuantumLabel label, const BackgroundSpec& bg,
                          const EPSolution& ep) {
  return WaveState{label, bg, ep, std::make_shared<PhaseIntegral>(bg, ep)};
}

namespace {

double factorial(int n) {
  double f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

struct EvalContext {
  double sigma, sigma_dot, a, hbar;
  int n, m, q;     // q = n - m
  double b_u;      // 1 - m + n
  double zeta;     // 1 / (hbar sigma^2)
  Complex kappa;   // (a - i sigma sigma') / (2 a hbar sigma^2)
  Complex pref;    // lambda_n (i sqrt(hbar) sigma)^m / sqrt(m!)
};

EvalContext make_context(const WaveState& ws, double t) {
  if (!ws.ep.validity().contains(t))
    throw DomainError("eval_state: t = " + std::to_string(t) +
                      " outside the EP solution validity");
  EvalContext ctx;
  ctx.sigma = ws.ep.sigma(t);
  ctx.sigma_dot = ws.ep.sigma_dot(t);
  ctx.a = coefficients(ws.background, t).a;
  ctx.hbar = ws.constants().hbar;
  ctx.n = ws.label.n;
  ctx.m = ws.label.m;
  ctx.q = ctx.n - ctx.m;
  ctx.b_u = 1.0 - ctx.m + ctx.n;
  ctx.zeta = 1.0 / (ctx.hbar * ctx.sigma * ctx.sigma);
  ctx.kappa = Complex(ctx.a, -ctx.sigma * ctx.sigma_dot) /
              (2.0 * ctx.a * ctx.hbar * ctx.sigma * ctx.sigma);
  const double lambda_n =
      std::sqrt(1.0 / (M_PI * factorial(ctx.n) *
                       std::pow(ctx.hbar * ctx.sigma * ctx.sigma, 1 + ctx.n)));
  static constexpr Complex i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  ctx.pref = lambda_n * std::pow(std::sqrt(ctx.hbar) * ctx.sigma, ctx.m) /
             std::sqrt(factorial(ctx.m)) * i_pow[ctx.m % 4];
  return ctx;
}

struct RadialValue {
  Complex f, df, d2f;  // radial profile and derivatives, prefactor included
};

// f(r) = pref * r^q * exp(-kappa r^2) * U(-m, b_u, zeta r^2)
RadialValue radial_profile(const EvalContext& ctx, double r) {
  RadialValue out;
  if (r == 0.0) {
    if (ctx.q == 0) {
      const double p0 = hyper_u_neg_int(ctx.m, ctx.b_u, 0.0);
      const double p1 = ctx.m > 0 ? hyper_u_neg_int_derivs(ctx.m, ctx.b_u, 0.0).d1 : 0.0;
      out.f = ctx.pref * p0;
      out.df = 0.0;
      out.d2f = ctx.pref * (2.0 * ctx.zeta * p1 - 2.0 * ctx.kappa * p0);
    }
    return out;
  }
  const double z = ctx.zeta * r * r;
  const PolyDerivs u = hyper_u_neg_int_derivs(ctx.m, ctx.b_u, z);
  const Complex e = std::exp(-ctx.kappa * r * r);
  const Complex g = e * u.value;
  const Complex gq = 2.0 * ctx.zeta * u.d1 - 2.0 * ctx.kappa * u.value;
  const Complex dg = e * r * gq;
  const Complex d2g =
      e * (gq * (1.0 - 2.0 * ctx.kappa * r * r) +
           4.0 * ctx.zeta * r * r * (ctx.zeta * u.d2 - ctx.kappa * u.d1));
  const double rq = std::pow(r, ctx.q);
  out.f = ctx.pref * rq * g;
  out.df = ctx.pref * (ctx.q * rq / r * g + rq * dg);
  out.d2f = ctx.pref * (ctx.q * (ctx.q - 1.0) * rq / (r * r) * g +
                        2.0 * ctx.q * rq / r * dg + rq * d2g);
  return out;
}

Complex phase_factor(const WaveState& ws, double t, bool with_phase) {
  if (!with_phase) return {1.0, 0.0};
  if (!ws.phase)
    throw DomainError("eval_state: with_phase requested but no PhaseIntegral attached");
  return std::exp(Complex(0.0, ws.phase->alpha(ws.label, t)));
}

}  // namespace

Complex eval_state(const WaveState& ws, double r, double theta, double t,
                   bool with_phase) {
  if (r < 0) throw DomainError("eval_state: r must be >= 0");
  const EvalContext ctx = make_context(ws, t);
  const RadialValue rv = radial_profile(ctx, r);
  const Complex ang = std::exp(Complex(0.0, ws.label.ell() * theta));
  return rv.f * ang * phase_factor(ws, t, with_phase);
}

StateDerivs eval_state_derivs(const WaveState& ws, double r, double theta, double t,
                              bool with_phase) {
  if (r < 0) throw DomainError("eval_state: r must be >= 0");
  const EvalContext ctx = make_context(ws, t);
  const RadialValue rv = radial_profile(ctx, r);
  const Complex factor =
      std::exp(Complex(0.0, ws.label.ell() * theta)) * phase_factor(ws, t, with_phase);
  return {rv.f * factor, rv.df * factor, rv.d2f * factor};
}

PolarGrid make_polar_grid(const WaveState& ws, double t, int n_radial, int n_angular) {
  const double hbar = ws.constants().hbar;
  const double sg = ws.ep.sigma(t);
  const int nm = ws.label.n + ws.label.m;
  const double r_max = std::sqrt(hbar * sg * sg * (40.0 + 10.0 * nm));
  const GaussRule rule = gauss_legendre_mapped(n_radial, 0.0, r_max);
  PolarGrid grid;
  grid.r = rule.nodes;
  grid.wr.resize(n_radial);
  for (int i = 0; i < n_radial; ++i) grid.wr[i] = rule.weights[i] * rule.nodes[i];
  grid.theta.resize(n_angular);
  for (int j = 0; j < n_angular; ++j) grid.theta[j] = 2.0 * M_PI * j / n_angular;
  return grid;
}

namespace {

// <f|g> over a shared polar grid using only radial profiles: the angular
// integral of e^{i(l_g - l_f) theta} is done exactly.
Complex radial_overlap(const WaveState& a, const WaveState& b, double t,
                       int n_radial) {
  if (a.label.ell() != b.label.ell()) return {0.0, 0.0};
  const EvalContext ca = make_context(a, t);
  const EvalContext cb = make_context(b, t);
  const double sg = std::max(ca.sigma, cb.sigma);
  const int nm = std::max(a.label.n + a.label.m, b.label.n + b.label.m);
  const double r_max = std::sqrt(ca.hbar * sg * sg * (40.0 + 10.0 * nm));
  const GaussRule rule = gauss_legendre_mapped(n_radial, 0.0, r_max);
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double r = rule.nodes[i];
    acc += rule.weights[i] * r * std::conj(radial_profile(ca, r).f) *
           radial_profile(cb, r).f;
  }
  return 2.0 * M_PI * acc;
}

}  // namespace

Complex orthonormality(const WaveState& a, const WaveState& b, double t,
                       double check_tol) {
  // full 2D quadrature, with the angular part summed over the uniform grid
  const int n_angular = 64;
  const EvalContext ca = make_context(a, t);
  const EvalContext cb = make_context(b, t);
  const double sg = std::max(ca.sigma, cb.sigma);
  const int nm = std::max(a.label.n + a.label.m, b.label.n + b.label.m);
  const double r_max = std::sqrt(ca.hbar * sg * sg * (40.0 + 10.0 * nm));

  const auto integrate = [&](int n_radial) {
    const GaussRule rule = gauss_legendre_mapped(n_radial, 0.0, r_max);
    // angular sum of e^{i(l_b - l_a) theta} over the uniform grid
    const int dl = b.label.ell() - a.label.ell();
    Complex ang{0.0, 0.0};
    for (int j = 0; j < n_angular; ++j)
      ang += std::exp(Complex(0.0, dl * 2.0 * M_PI * j / n_angular));
    ang *= 2.0 * M_PI / n_angular;
    Complex rad{0.0, 0.0};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double r = rule.nodes[i];
      rad += rule.weights[i] * r * std::conj(radial_profile(ca, r).f) *
             radial_profile(cb, r).f;
    }
    return rad * ang;
  };

  const Complex coarse = integrate(96);
  const Complex fine = integrate(144);
  if (std::abs(fine - coarse) > check_tol)
    throw QuadratureError("orthonormality: quadrature did not converge",
                          std::abs(fine - coarse));
  return fine;
}

double state_norm(const WaveState& ws, double t, int n_radial, int n_angular) {
  (void)n_angular;
  const EvalContext ctx = make_context(ws, t);
  const double r_max = std::sqrt(ctx.hbar * ctx.sigma * ctx.sigma *
                                 (40.0 + 10.0 * (ws.label.n + ws.label.m)));
  const GaussRule rule = gauss_legendre_mapped(n_radial, 0.0, r_max);
  double acc = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double r = rule.nodes[i];
    acc += rule.weights[i] * r * std::norm(radial_profile(ctx, r).f);
  }
  return 2.0 * M_PI * acc;
}

namespace {

struct LadderTerms {
  Complex common;  // -i hbar sigma (F' + F/(2r)) - (sigma'/a) r F
  Complex ring;    // r/sigma F
  double sigma;
  double hbar;
};

LadderTerms ladder_terms(const EvalContext& ctx, const RadialValue& rv, double r) {
  LadderTerms lt;
  lt.common = Complex(0.0, -ctx.hbar * ctx.sigma) * (rv.df + rv.f / (2.0 * r)) -
              (ctx.sigma_dot / ctx.a) * r * rv.f;
  lt.ring = r / ctx.sigma * rv.f;
  lt.sigma = ctx.sigma;
  lt.hbar = ctx.hbar;
  return lt;
}

}  // namespace

Complex apply_annihilation(const WaveState& ws, double r, double theta, double t) {
  const EvalContext ctx = make_context(ws, t);
  const RadialValue rv = radial_profile(ctx, r);
  const int ell = ws.label.ell();
  const LadderTerms lt = ladder_terms(ctx, rv, r);
  const Complex bracket =
      lt.common - Complex(0.0, 1.0) * (lt.ring + ctx.sigma / r * ctx.hbar *
                                                     (ell - 1 + 0.5) * rv.f);
  return bracket / (2.0 * std::sqrt(ctx.hbar)) *
         std::exp(Complex(0.0, (ell - 1) * theta));
}

Complex apply_creation(const WaveState& ws, double r, double theta, double t) {
  const EvalContext ctx = make_context(ws, t);
  const RadialValue rv = radial_profile(ctx, r);
  const int ell = ws.label.ell();
  const LadderTerms lt = ladder_terms(ctx, rv, r);
  const Complex bracket =
      lt.common + Complex(0.0, 1.0) * (lt.ring + ctx.sigma / r * ctx.hbar *
                                                     (ell + 0.5) * rv.f);
  return bracket / (2.0 * std::sqrt(ctx.hbar)) *
         std::exp(Complex(0.0, (ell + 1) * theta));
}

double annihilation_residual(const WaveState& ws, const PolarGrid& grid, double t) {
  if (ws.label.m != 0)
    throw DomainError("annihilation_residual: defined for the m = 0 states");
  const EvalContext ctx = make_context(ws, t);
  double num = 0, den = 0;
  for (std::size_t i = 0; i < grid.r.size(); ++i) {
    const double r = grid.r[i];
    const RadialValue rv = radial_profile(ctx, r);
    const int ell = ws.label.ell();
    const LadderTerms lt = ladder_terms(ctx, rv, r);
    const Complex av =
        (lt.common - Complex(0.0, 1.0) * (lt.ring + ctx.sigma / r * ctx.hbar *
                                                        (ell - 1 + 0.5) * rv.f)) /
        (2.0 * std::sqrt(ctx.hbar));
    num += grid.wr[i] * std::norm(av);
    den += grid.wr[i] * std::norm(rv.f);
  }
  return std::sqrt(num / den);
}

namespace {

// I_hat psi with I = (tau/sigma^2) r^2 + (sigma p_r - (sigma'/a) r)^2
//                 + sigma^2 p_theta^2 / r^2 - sigma^2 hbar^2 / (4 r^2),
// I_hat = I/4 - p_theta/2.
Complex apply_invariant(const EvalContext& ctx, const RadialValue& rv, double r,
                        int ell, double tau) {
  const double hb = ctx.hbar;
  const double sg = ctx.sigma;
  const double ratio = ctx.sigma_dot / ctx.a;
  const Complex p_r2 =
      -hb * hb * (rv.d2f + rv.df / r - rv.f / (4.0 * r * r));
  const Complex cross = Complex(0.0, 2.0 * hb) * sg * ratio * (r * rv.df + rv.f);
  const Complex big_i = tau / (sg * sg) * r * r * rv.f + sg * sg * p_r2 + cross +
                        ratio * ratio * r * r * rv.f +
                        sg * sg * hb * hb * ell * ell / (r * r) * rv.f -
                        sg * sg * hb * hb / (4.0 * r * r) * rv.f;
  return 0.25 * big_i - 0.5 * hb * ell * rv.f;
}

}  // namespace

double invariant_residual(const WaveState& ws, const PolarGrid& grid, double t) {
  const EvalContext ctx = make_context(ws, t);
  const double tau = ws.constants().tau;
  const double eig = ctx.hbar * (ws.label.n + 0.5);
  const int ell = ws.label.ell();
  double num = 0, den = 0;
  for (std::size_t i = 0; i < grid.r.size(); ++i) {
    const double r = grid.r[i];
    const RadialValue rv = radial_profile(ctx, r);
    const Complex iv = apply_invariant(ctx, rv, r, ell, tau);
    num += grid.wr[i] * std::norm(iv - eig * rv.f);
    den += grid.wr[i] * std::norm(rv.f);
  }
  return std::sqrt(num / den) / eig;
}

double invariant_rayleigh(const WaveState& ws, const PolarGrid& grid, double t) {
  const EvalContext ctx = make_context(ws, t);
  const double tau = ws.constants().tau;
  const int ell = ws.label.ell();
  Complex num{0, 0};
  double den = 0;
  for (std::size_t i = 0; i < grid.r.size(); ++i) {
    const double r = grid.r[i];
    const RadialValue rv = radial_profile(ctx, r);
    const Complex iv = apply_invariant(ctx, rv, r, ell, tau);
    num += grid.wr[i] * std::conj(rv.f) * iv;
    den += grid.wr[i] * std::norm(rv.f);
  }
  return num.real() / den;
}

double schrodinger_residual(const WaveState& ws, const PolarGrid& grid, double t,
                            double dt, bool with_phase) {
  const Coefficients co = coefficients(ws.background, t);
  const double hb = ws.constants().hbar;
  const int ell = ws.label.ell();

  double num = 0, den = 0;
  // the angular factor drops out of both norms, so one theta value suffices
  const double theta0 = 0.0;
  for (std::size_t i = 0; i < grid.r.size(); ++i) {
    const double r = grid.r[i];
    const StateDerivs now = eval_state_derivs(ws, r, theta0, t, with_phase);
    const Complex plus = eval_state(ws, r, theta0, t + dt, with_phase);
    const Complex minus = eval_state(ws, r, theta0, t - dt, with_phase);
    const Complex dpsi_dt = (plus - minus) / (2.0 * dt);
    const Complex h_psi =
        -0.5 * co.a * hb * hb *
            (now.d2psi_dr2 + now.dpsi_dr / r - ell * ell / (r * r) * now.psi) +
        0.5 * co.b * r * r * now.psi - co.c * hb * ell * now.psi;
    const Complex resid = Complex(0.0, hb) * dpsi_dt - h_psi;
    num += grid.wr[i] * std::norm(resid);
    den += grid.wr[i] * std::norm(h_psi);
  }
  return std::sqrt(num / den);
}

}  // namespace ncosc
