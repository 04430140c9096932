#pragma once

#include <optional>
#include <string>

#include "ncosc/constants.hpp"

namespace ncosc {

// One-parameter families of real functions of time used both for the
// noncommutative fields theta(t), Omega(t) and for directly prescribed
// Hamiltonian coefficients a(t), b(t).
struct TimeFamily {
  enum class Kind { Constant, Exponential, Sinusoidal, PowerLaw };

  Kind kind = Kind::Constant;
  double amplitude = 0;  // prefactor in every family
  double rate = 0;       // exponent rate / angular frequency / gamma
  double power = 0;      // PowerLaw only
  double mu = 0;         // PowerLaw only

  // Constant:     amplitude
  // Exponential:  amplitude * exp(rate * t)
  // Sinusoidal:   amplitude * sin(rate * t)
  // PowerLaw:     amplitude * (mu - rate * t)^power, defined for t < mu/rate
  double value(double t) const;
  double derivative(double t) const;

  static TimeFamily constant(double c);
  static TimeFamily exponential(double amplitude, double rate);
  static TimeFamily sinusoidal(double amplitude, double rate);
  static TimeFamily power_law(double amplitude, double rate, double power, double mu);

  std::string describe() const;
};

struct BackgroundSpec {
  enum class Mode { ThetaOmega, DirectAB };

  Mode mode = Mode::ThetaOmega;
  TimeFamily theta, omega;  // ThetaOmega mode
  TimeFamily a, b;          // DirectAB mode
  PhysicalConstants constants;
  Interval validity;

  static BackgroundSpec theta_omega(TimeFamily theta, TimeFamily omega,
                                    PhysicalConstants pc = {}, Interval validity = {});
  static BackgroundSpec direct_ab(TimeFamily a, TimeFamily b,
                                  PhysicalConstants pc = {}, Interval validity = {});
};

struct Coefficients {
  double a = 0, b = 0, c = 0;
};

// Hamiltonian coefficients at time t:
//   a = 1/m + m w^2 theta^2 / (4 hbar^2)
//   b = m w^2 + Omega^2 / (4 m hbar^2)
//   c = m w^2 theta / (2 hbar) + Omega / (2 hbar m)
// In DirectAB mode a, b are the prescribed values and c comes from the
// inverted fields. Throws DomainError when the inverse map fails.
Coefficients coefficients(const BackgroundSpec& bg, double t);

// da/dt at time t (needed by the dissipative term of the EP equation).
double coefficient_a_dot(const BackgroundSpec& bg, double t);

struct BackgroundFields {
  double theta = 0, omega = 0;
};

// theta(t), Omega(t); in DirectAB mode via invert_background.
BackgroundFields background_fields(const BackgroundSpec& bg, double t);

// Inverse of the coefficient map, nonnegative branch:
//   theta = (2 hbar / (m w)) sqrt(a - 1/m),  Omega = 2 hbar sqrt(m (b - m w^2)).
// Throws DomainError when a < 1/m or b < m w^2.
BackgroundFields invert_background(double a, double b, const PhysicalConstants& pc);

// Latest time with real background fields for the DirectAB Chiellini
// families: ln(m alpha)/gamma for the exponential one, mu/gamma for the
// rational one. Absent in ThetaOmega mode.
std::optional<double> cutoff_time(const BackgroundSpec& bg);

}  // namespace ncosc
