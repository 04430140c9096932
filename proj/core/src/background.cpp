#include "ncosc/background.hpp"

#include <cmath>
#include <sstream>

#include "ncosc/errors.hpp"

namespace ncosc {

void PhysicalConstants::validate() const {
  if (!(m > 0 && hbar > 0 && omega > 0 && tau > 0))
    throw ConfigError("constants: m, hbar, omega, tau must all be > 0");
}

double TimeFamily::value(double t) const {
  switch (kind) {
    case Kind::Constant:
      return amplitude;
    case Kind::Exponential:
      return amplitude * std::exp(rate * t);
    case Kind::Sinusoidal:
      return amplitude * std::sin(rate * t);
    case Kind::PowerLaw: {
      const double s = mu - rate * t;
      if (s <= 0)
        throw DomainError("power-law family evaluated at t = " + std::to_string(t) +
                          " past its cutoff mu/gamma");
      return amplitude * std::pow(s, power);
    }
  }
  return 0;
}

double TimeFamily::derivative(double t) const {
  switch (kind) {
    case Kind::Constant:
      return 0;
    case Kind::Exponential:
      return rate * amplitude * std::exp(rate * t);
    case Kind::Sinusoidal:
      return amplitude * rate * std::cos(rate * t);
    case Kind::PowerLaw: {
      const double s = mu - rate * t;
      if (s <= 0)
        throw DomainError("power-law family evaluated at t = " + std::to_string(t) +
                          " past its cutoff mu/gamma");
      return -rate * power * amplitude * std::pow(s, power - 1.0);
    }
  }
  return 0;
}

TimeFamily TimeFamily::constant(double c) { return {Kind::Constant, c, 0, 0, 0}; }

TimeFamily TimeFamily::exponential(double amplitude, double rate) {
  return {Kind::Exponential, amplitude, rate, 0, 0};
}

TimeFamily TimeFamily::sinusoidal(double amplitude, double rate) {
  return {Kind::Sinusoidal, amplitude, rate, 0, 0};
}

TimeFamily TimeFamily::power_law(double amplitude, double rate, double power, double mu) {
  return {Kind::PowerLaw, amplitude, rate, power, mu};
}

std::string TimeFamily::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Constant:
      os << amplitude;
      break;
    case Kind::Exponential:
      os << amplitude << "*exp(" << rate << "*t)";
      break;
    case Kind::Sinusoidal:
      os << amplitude << "*sin(" << rate << "*t)";
      break;
    case Kind::PowerLaw:
      os << amplitude << "*(" << mu << " - " << rate << "*t)^" << power;
      break;
  }
  return os.str();
}

BackgroundSpec BackgroundSpec::theta_omega(TimeFamily theta, TimeFamily omega,
                                           PhysicalConstants pc, Interval validity) {
  pc.validate();
  BackgroundSpec bg;
  bg.mode = Mode::ThetaOmega;
  bg.theta = theta;
  bg.omega = omega;
  bg.constants = pc;
  bg.validity = validity;
  return bg;
}

BackgroundSpec BackgroundSpec::direct_ab(TimeFamily a, TimeFamily b, PhysicalConstants pc,
                                         Interval validity) {
  pc.validate();
  BackgroundSpec bg;
  bg.mode = Mode::DirectAB;
  bg.a = a;
  bg.b = b;
  bg.constants = pc;
  bg.validity = validity;
  return bg;
}

namespace {

void check_validity(const BackgroundSpec& bg, double t) {
  if (!bg.validity.contains(t))
    throw DomainError("background evaluated at t = " + std::to_string(t) +
                      " outside its validity interval");
}

double c_from_fields(double theta, double omega_field, const PhysicalConstants& pc) {
  return pc.m * pc.omega * pc.omega * theta / (2.0 * pc.hbar) +
         omega_field / (2.0 * pc.hbar * pc.m);
}

}  // namespace

BackgroundFields invert_background(double a, double b, const PhysicalConstants& pc) {
  const double a_floor = 1.0 / pc.m;
  const double b_floor = pc.m * pc.omega * pc.omega;
  // tolerate roundoff-level undershoot of the floors
  const double slack_a = 1e-12 * std::max(1.0, std::abs(a));
  const double slack_b = 1e-12 * std::max(1.0, std::abs(b));
  if (a < a_floor - slack_a)
    throw DomainError("invert_background: a = " + std::to_string(a) +
                      " below 1/m, theta would be imaginary");
  if (b < b_floor - slack_b)
    throw DomainError("invert_background: b = " + std::to_string(b) +
                      " below m*omega^2, Omega would be imaginary");
  BackgroundFields f;
  f.theta = 2.0 * pc.hbar / (pc.m * pc.omega) * std::sqrt(std::max(0.0, a - a_floor));
  f.omega = 2.0 * pc.hbar * std::sqrt(std::max(0.0, pc.m * (b - b_floor)));
  return f;
}

BackgroundFields background_fields(const BackgroundSpec& bg, double t) {
  check_validity(bg, t);
  if (bg.mode == BackgroundSpec::Mode::ThetaOmega)
    return {bg.theta.value(t), bg.omega.value(t)};
  try {
    return invert_background(bg.a.value(t), bg.b.value(t), bg.constants);
  } catch (const DomainError& e) {
    throw DomainError(std::string(e.what()) + " (at t = " + std::to_string(t) + ")");
  }
}

Coefficients coefficients(const BackgroundSpec& bg, double t) {
  check_validity(bg, t);
  const PhysicalConstants& pc = bg.constants;
  Coefficients k;
  if (bg.mode == BackgroundSpec::Mode::ThetaOmega) {
    const double theta = bg.theta.value(t);
    const double omega_field = bg.omega.value(t);
    k.a = 1.0 / pc.m + pc.m * pc.omega * pc.omega * theta * theta / (4.0 * pc.hbar * pc.hbar);
    k.b = pc.m * pc.omega * pc.omega +
          omega_field * omega_field / (4.0 * pc.m * pc.hbar * pc.hbar);
    k.c = c_from_fields(theta, omega_field, pc);
  } else {
    k.a = bg.a.value(t);
    k.b = bg.b.value(t);
    const BackgroundFields f = background_fields(bg, t);
    k.c = c_from_fields(f.theta, f.omega, pc);
  }
  return k;
}

double coefficient_a_dot(const BackgroundSpec& bg, double t) {
  check_validity(bg, t);
  const PhysicalConstants& pc = bg.constants;
  if (bg.mode == BackgroundSpec::Mode::ThetaOmega) {
    const double theta = bg.theta.value(t);
    return pc.m * pc.omega * pc.omega * theta * bg.theta.derivative(t) /
           (2.0 * pc.hbar * pc.hbar);
  }
  return bg.a.derivative(t);
}

std::optional<double> cutoff_time(const BackgroundSpec& bg) {
  if (bg.mode != BackgroundSpec::Mode::DirectAB) return std::nullopt;
  const PhysicalConstants& pc = bg.constants;
  if (bg.a.kind == TimeFamily::Kind::Exponential && bg.a.rate < 0 &&
      bg.a.amplitude * pc.m > 1.0) {
    // a(t_c) = 1/m for a = alpha e^{-gamma t}
    return std::log(pc.m * bg.a.amplitude) / (-bg.a.rate);
  }
  if (bg.a.kind == TimeFamily::Kind::PowerLaw && bg.a.rate > 0 && bg.a.mu > 0)
    return bg.a.mu / bg.a.rate;
  return std::nullopt;
}

}  // namespace ncosc
