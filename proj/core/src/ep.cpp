#include "ncosc/ep.hpp"

#include <algorithm>
#include <cmath>

#include "ncosc/errors.hpp"
#include "ncosc/special_functions.hpp"

namespace ncosc {

std::string to_string(EPKind kind) {
  switch (kind) {
    case EPKind::ChielliniExponential:
      return "chiellini_exponential";
    case EPKind::ChielliniRational:
      return "chiellini_rational";
    case EPKind::PinneySuperposition:
      return "pinney_superposition";
    case EPKind::Numeric:
      return "numeric";
  }
  return "?";
}

class EPSolution::Impl {
 public:
  virtual ~Impl() = default;
  virtual EPKind kind() const = 0;
  virtual Interval validity() const = 0;
  virtual double sigma(double t) const = 0;
  virtual double sigma_dot(double t) const = 0;
  virtual double sigma_ddot(double t) const = 0;
  virtual double residual_tolerance() const { return 1e-10; }
  const std::map<std::string, double>& params() const { return params_; }

 protected:
  std::map<std::string, double> params_;
};

EPSolution::EPSolution(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
EPKind EPSolution::kind() const { return impl_->kind(); }
Interval EPSolution::validity() const { return impl_->validity(); }
double EPSolution::sigma(double t) const { return impl_->sigma(t); }
double EPSolution::sigma_dot(double t) const { return impl_->sigma_dot(t); }
double EPSolution::sigma_ddot(double t) const { return impl_->sigma_ddot(t); }
double EPSolution::residual_tolerance() const { return impl_->residual_tolerance(); }
const std::map<std::string, double>& EPSolution::params() const { return impl_->params(); }

namespace {

class ChielliniExponentialImpl final : public EPSolution::Impl {
 public:
  ChielliniExponentialImpl(double mu, double gamma) : mu_(mu), gamma_(gamma) {
    params_ = {{"mu", mu}, {"gamma", gamma}};
  }
  EPKind kind() const override { return EPKind::ChielliniExponential; }
  Interval validity() const override { return {}; }
  double sigma(double t) const override { return mu_ * std::exp(-0.5 * gamma_ * t); }
  double sigma_dot(double t) const override { return -0.5 * gamma_ * sigma(t); }
  double sigma_ddot(double t) const override { return 0.25 * gamma_ * gamma_ * sigma(t); }

 private:
  double mu_, gamma_;
};

class ChielliniRationalImpl final : public EPSolution::Impl {
 public:
  ChielliniRationalImpl(int n, double gamma, double mu)
      : n_(n), gamma_(gamma), mu_(mu), c_((n + 2.0) / n) {
    params_ = {{"n", static_cast<double>(n)}, {"gamma", gamma}, {"mu", mu}};
  }
  EPKind kind() const override { return EPKind::ChielliniRational; }
  Interval validity() const override { return {-Interval::unbounded(), mu_ / gamma_ - 1e-9}; }
  double sigma(double t) const override {
    return std::pow(c_, 1.0 / n_) * std::pow(s(t), -1.0 / n_);
  }
  double sigma_dot(double t) const override { return sigma(t) * gamma_ / (n_ * s(t)); }
  double sigma_ddot(double t) const override {
    const double g = gamma_ / (n_ * s(t));
    return sigma(t) * g * g * (1.0 + n_);
  }

 private:
  double s(double t) const {
    const double v = mu_ - gamma_ * t;
    if (v <= 0)
      throw DomainError("rational EP solution evaluated past its cutoff mu/gamma");
    return v;
  }
  int n_;
  double gamma_, mu_, c_;
};

// sigma from the J0/Y0 pair for b = beta e^{gamma t}, a = alpha constant.
class PinneyBesselImpl final : public EPSolution::Impl {
 public:
  PinneyBesselImpl(double alpha, double beta, double gamma, double c1, double tau,
                   Interval span)
      : alpha_(alpha), beta_(beta), gamma_(gamma), c1_(c1), tau_(tau), span_(span) {
    params_ = {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}, {"c1", c1}};
  }
  EPKind kind() const override { return EPKind::PinneySuperposition; }
  Interval validity() const override { return span_; }

  double sigma(double t) const override {
    State st = eval(t);
    return st.sigma;
  }
  double sigma_dot(double t) const override {
    State st = eval(t);
    return st.sigma_dot;
  }
  double sigma_ddot(double t) const override {
    State st = eval(t);
    // second derivative of sqrt(u1^2 + K u2^2) by direct differentiation;
    // u'' comes from the Bessel derivative identities, not from the ODE
    const double num = st.du1 * st.du1 + st.u1 * st.ddu1 +
                       st.K * (st.du2 * st.du2 + st.u2 * st.ddu2) -
                       st.sigma_dot * st.sigma_dot;
    return num / st.sigma;
  }

 private:
  struct State {
    double u1, du1, ddu1, u2, du2, ddu2, K, sigma, sigma_dot;
  };
  State eval(double t) const {
    const double x = 2.0 * std::sqrt(alpha_ * beta_) / gamma_ * std::exp(0.5 * gamma_ * t);
    const double xdot = 0.5 * gamma_ * x;
    const double xddot = 0.25 * gamma_ * gamma_ * x;
    const double j0 = bessel_j0(x), j1 = bessel_j1(x);
    const double y0 = bessel_y0(x), y1 = bessel_y1(x);
    State st;
    st.u1 = c1_ * j0;
    st.du1 = -c1_ * j1 * xdot;
    // Z1' = Z0 - Z1/x
    st.ddu1 = -c1_ * ((j0 - j1 / x) * xdot * xdot + j1 * xddot);
    st.u2 = y0;
    st.du2 = -y1 * xdot;
    st.ddu2 = -((y0 - y1 / x) * xdot * xdot + y1 * xddot);
    const double w = c1_ * gamma_ / M_PI;
    st.K = tau_ * alpha_ * alpha_ / (w * w);
    st.sigma = std::sqrt(st.u1 * st.u1 + st.K * st.u2 * st.u2);
    st.sigma_dot = (st.u1 * st.du1 + st.K * st.u2 * st.du2) / st.sigma;
    return st;
  }

  double alpha_, beta_, gamma_, c1_, tau_;
  Interval span_;
};

// generic fundamental pair (u1, u2) of u'' + a b(t) u = 0, integrated once
class PinneyNumericImpl final : public EPSolution::Impl {
 public:
  PinneyNumericImpl(const TimeFamily& b_family, double a_const, double c1, double tau,
                    Interval span, double tolerance)
      : a_(a_const), c1_(c1), tau_(tau), b_family_(b_family), span_(span) {
    OdeRhs rhs = [this](double t, const std::vector<double>& y,
                        std::vector<double>& dydt) {
      const double ab = a_ * b_family_.value(t);
      dydt[0] = y[1];
      dydt[1] = -ab * y[0];
      dydt[2] = y[3];
      dydt[3] = -ab * y[2];
    };
    OdeOptions opts;
    opts.rel_tol = tolerance;
    opts.abs_tol = tolerance * 1e-2;
    opts.max_step = (span.hi - span.lo) / 64.0;
    dense_ = integrate_dopri5(rhs, {c1, 0.0, 0.0, 1.0}, span.lo, span.hi, opts);
    params_ = {{"a", a_const}, {"c1", c1}};
  }
  EPKind kind() const override { return EPKind::PinneySuperposition; }
  Interval validity() const override { return span_; }
  double residual_tolerance() const override { return 1e-6; }

  double sigma(double t) const override { return eval(t).sigma; }
  double sigma_dot(double t) const override { return eval(t).sigma_dot; }
  double sigma_ddot(double t) const override {
    const State st = eval(t);
    const double ab = a_ * b_family_.value(t);
    // u'' = -a b u along the pair
    const double num = st.du1 * st.du1 + st.K * st.du2 * st.du2 -
                       ab * (st.u1 * st.u1 + st.K * st.u2 * st.u2) -
                       st.sigma_dot * st.sigma_dot;
    return num / st.sigma;
  }

 private:
  struct State {
    double u1, du1, u2, du2, K, sigma, sigma_dot;
  };
  State eval(double t) const {
    State st;
    st.u1 = dense_.value(t, 0);
    st.du1 = dense_.value(t, 1);
    st.u2 = dense_.value(t, 2);
    st.du2 = dense_.value(t, 3);
    const double w = c1_;  // Wronskian of the chosen initial pair
    st.K = tau_ * a_ * a_ / (w * w);
    st.sigma = std::sqrt(st.u1 * st.u1 + st.K * st.u2 * st.u2);
    st.sigma_dot = (st.u1 * st.du1 + st.K * st.u2 * st.du2) / st.sigma;
    return st;
  }

  double a_, c1_, tau_;
  TimeFamily b_family_;
  Interval span_;
  DenseOutput dense_;
};

class NumericImpl final : public EPSolution::Impl {
 public:
  NumericImpl(const BackgroundSpec& bg, double sigma0, double dsigma0, double t0,
              double t1, double tolerance)
      : bg_(bg), span_{t0, t1} {
    OdeRhs rhs = [this](double t, const std::vector<double>& y,
                        std::vector<double>& dydt) {
      dydt[0] = y[1];
      dydt[1] = this->acceleration(t, y[0], y[1]);
    };
    OdeOptions opts;
    opts.rel_tol = tolerance;
    opts.abs_tol = tolerance * 1e-2;
    opts.max_step = std::min(0.02, (t1 - t0) / 64.0);
    opts.monitor = [this](double t, const std::vector<double>& y) {
      if (y[0] < 1e-8)
        throw SingularityError(
            "integrate_ep: sigma fell below 1e-8 at t = " + std::to_string(t), t);
    };
    dense_ = integrate_dopri5(rhs, {sigma0, dsigma0}, t0, t1, opts);
    params_ = {{"sigma0", sigma0}, {"dsigma0", dsigma0}, {"tolerance", tolerance}};
  }

  EPKind kind() const override { return EPKind::Numeric; }
  Interval validity() const override { return span_; }
  double residual_tolerance() const override { return 1e-6; }
  double sigma(double t) const override { return dense_.value(t, 0); }
  double sigma_dot(double t) const override { return dense_.value(t, 1); }
  // derivative of the sigma' interpolant: honest defect, no ODE shortcut
  double sigma_ddot(double t) const override { return dense_.derivative(t, 1); }

  double acceleration(double t, double sigma, double sigma_dot) const {
    const Coefficients k = coefficients(bg_, t);
    if (k.a <= 0)
      throw SingularityError("integrate_ep: a(t) crossed zero at t = " + std::to_string(t),
                             t);
    if (sigma < 1e-8)
      throw SingularityError(
          "integrate_ep: sigma fell below 1e-8 at t = " + std::to_string(t), t);
    const double adot = coefficient_a_dot(bg_, t);
    const double tau = bg_.constants.tau;
    return adot / k.a * sigma_dot - k.a * k.b * sigma +
           tau * k.a * k.a / (sigma * sigma * sigma);
  }

 private:
  BackgroundSpec bg_;
  Interval span_;
  DenseOutput dense_;
};

}  // namespace

ChielliniFamily chiellini_exponential(double alpha, double beta, double gamma,
                                      const PhysicalConstants& pc) {
  pc.validate();
  constexpr double kappa = 0.25;
  const double denom = alpha * beta - kappa * gamma * gamma;
  if (!(denom > 0))
    throw ConstraintError(
        "chiellini_exponential: need alpha*beta - gamma^2/4 > 0, got " +
        std::to_string(denom));
  const double mu = std::pow(pc.tau * alpha * alpha / denom, 0.25);
  ChielliniFamily fam{
      BackgroundSpec::direct_ab(TimeFamily::exponential(alpha, -gamma),
                                TimeFamily::exponential(beta, gamma), pc),
      EPSolution(std::make_shared<ChielliniExponentialImpl>(mu, gamma)), kappa};
  return fam;
}

ChielliniFamily chiellini_rational(int n, double alpha, double beta, double gamma,
                                   double mu, const PhysicalConstants& pc) {
  pc.validate();
  if (n < 1) throw ConstraintError("chiellini_rational: n must be a positive integer");
  if (!(gamma > 0) || !(mu > 0))
    throw ConstraintError("chiellini_rational: gamma and mu must be > 0");
  const double kappa = (n + 1.0) / ((n + 2.0) * (n + 2.0));
  const double rhs = alpha * beta - pc.tau * alpha * alpha;
  if (!(rhs > 0))
    throw ConstraintError("chiellini_rational: need alpha*beta > tau*alpha^2");
  const double gamma2_required = (n + 1.0) * rhs / kappa;
  if (std::abs(gamma * gamma - gamma2_required) >
      1e-10 * std::max(1.0, gamma2_required))
    throw ConstraintError(
        "chiellini_rational: gamma^2 violates (n+1)(alpha*beta - tau*alpha^2)/kappa: " +
        std::to_string(gamma * gamma) + " vs " + std::to_string(gamma2_required));

  const double ratio = (n + 2.0) / n;
  TimeFamily a = TimeFamily::power_law(alpha * std::pow(ratio, ratio), gamma,
                                       -ratio, mu);
  TimeFamily b = TimeFamily::power_law(beta * std::pow(1.0 / ratio, 2.0 / n - 1.0),
                                       gamma, 2.0 / n - 1.0, mu);
  Interval validity{-Interval::unbounded(), mu / gamma - 1e-9};
  ChielliniFamily fam{BackgroundSpec::direct_ab(a, b, pc, validity),
                      EPSolution(std::make_shared<ChielliniRationalImpl>(n, gamma, mu)),
                      kappa};
  return fam;
}

double pinney_bessel_sigma(double t, double alpha, double beta, double gamma, double c1,
                           double tau) {
  const double x = 2.0 * std::sqrt(alpha * beta) / gamma * std::exp(0.5 * gamma * t);
  const double j0 = bessel_j0(x), y0 = bessel_y0(x);
  const double s2 = M_PI * M_PI * alpha * alpha * tau / (gamma * gamma * c1 * c1) * y0 * y0 +
                    c1 * c1 * j0 * j0;
  return std::sqrt(s2);
}

EPSolution pinney_superposition(const TimeFamily& b_family, double a_const, double c1,
                                const PhysicalConstants& pc, Interval span,
                                double tolerance) {
  pc.validate();
  if (!(a_const > 0)) throw ConstraintError("pinney_superposition: a must be > 0");
  if (std::abs(c1) < 1e-12)
    throw DegeneracyError("pinney_superposition: Wronskian ~ 0 for c1 ~ 0");
  if (b_family.kind == TimeFamily::Kind::Exponential && b_family.rate > 0 &&
      b_family.amplitude > 0) {
    return EPSolution(std::make_shared<PinneyBesselImpl>(
        a_const, b_family.amplitude, b_family.rate, c1, pc.tau, span));
  }
  return EPSolution(std::make_shared<PinneyNumericImpl>(b_family, a_const, c1, pc.tau,
                                                        span, tolerance));
}

EPSolution integrate_ep(const BackgroundSpec& bg, double sigma0, double dsigma0,
                        const std::vector<double>& t_grid, double tolerance) {
  if (t_grid.size() < 2) throw ConfigError("integrate_ep: need at least two grid times");
  if (!(sigma0 > 0)) throw ConstraintError("integrate_ep: sigma0 must be > 0");
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    if (!(t_grid[i] > t_grid[i - 1]))
      throw ConfigError("integrate_ep: t_grid must be strictly increasing");
  return EPSolution(std::make_shared<NumericImpl>(bg, sigma0, dsigma0, t_grid.front(),
                                                  t_grid.back(), tolerance));
}

double ep_residual(const EPSolution& sol, const BackgroundSpec& bg, double t) {
  const Coefficients k = coefficients(bg, t);
  const double adot = coefficient_a_dot(bg, t);
  const double s = sol.sigma(t);
  const double sd = sol.sigma_dot(t);
  const double sdd = sol.sigma_ddot(t);
  const double tau = bg.constants.tau;
  return std::abs(sdd - adot / k.a * sd + k.a * k.b * s - tau * k.a * k.a / (s * s * s));
}

double max_ep_residual(const EPSolution& sol, const BackgroundSpec& bg, double lo,
                       double hi, int n_probe) {
  lo = std::max(lo, sol.validity().lo);
  hi = std::min(hi, sol.validity().hi);
  double worst = 0;
  for (int i = 0; i < n_probe; ++i) {
    const double t = lo + (hi - lo) * i / (n_probe - 1);
    worst = std::max(worst, ep_residual(sol, bg, t));
  }
  return worst;
}

ChielliniCheck check_chiellini(const std::function<double(double)>& g,
                               const std::function<double(double)>& h,
                               const std::vector<double>& probe_grid) {
  ChielliniCheck out;
  if (probe_grid.empty()) return out;
  std::vector<double> kappas;
  kappas.reserve(probe_grid.size());
  const auto ratio = [&](double s) { return h(s) / g(s); };
  for (double s : probe_grid) {
    // Richardson-extrapolated central difference of h/g
    const double step = 1e-4 * std::max(1.0, std::abs(s));
    const double d1 = (ratio(s + step) - ratio(s - step)) / (2.0 * step);
    const double d2 = (ratio(s + 0.5 * step) - ratio(s - 0.5 * step)) / step;
    const double deriv = (4.0 * d2 - d1) / 3.0;
    kappas.push_back(deriv / g(s));
  }
  double mean = 0;
  for (double k : kappas) mean += k;
  mean /= kappas.size();
  double spread = 0;
  for (double k : kappas) spread = std::max(spread, std::abs(k - mean));
  out.kappa = mean;
  out.residual = spread;
  out.integrable = spread < 1e-8 * std::max(1.0, std::abs(mean));
  return out;
}

}  // namespace ncosc
