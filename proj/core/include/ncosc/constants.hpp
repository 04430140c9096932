#pragma once

#include <limits>

namespace ncosc {

// Model constants in dimensionless units. All figures of the reference
// runs use m = hbar = omega = tau = 1.
struct PhysicalConstants {
  double m = 1.0;      // mass
  double hbar = 1.0;   // action scale
  double omega = 1.0;  // oscillator frequency
  double tau = 1.0;    // Ermakov-Pinney integration constant

  void validate() const;  // throws ConfigError unless all entries > 0
};

struct Interval {
  double lo = -unbounded();
  double hi = unbounded();

  static constexpr double unbounded() { return 1e300; }

  bool contains(double t) const { return t >= lo && t <= hi; }
  bool is_unbounded_above() const { return hi >= unbounded(); }
};

}  // namespace ncosc
