#include "ncosc/ode.hpp"

#include <algorithm>
#include <cmath>

#include "ncosc/errors.hpp"

namespace ncosc {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                 a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0,
                 a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;
// b - b_hat, the embedded error coefficients
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
// dense-output coefficients (Hairer's contd5)
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

}  // namespace

const DenseOutput::Segment& DenseOutput::locate(double t) const {
  if (segments_.empty()) throw NumericalError("DenseOutput: empty");
  // binary search for the segment containing t; clamp to the span
  std::size_t lo = 0, hi = segments_.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    if (segments_[mid].t0 <= t)
      lo = mid;
    else
      hi = mid - 1;
  }
  return segments_[lo];
}

double DenseOutput::value(double t, std::size_t component) const {
  const Segment& s = locate(t);
  const double u = (t - s.t0) / s.h;
  const auto& c = s.poly[component];
  return c[0] + u * (c[1] + u * (c[2] + u * (c[3] + u * c[4])));
}

double DenseOutput::derivative(double t, std::size_t component) const {
  const Segment& s = locate(t);
  const double u = (t - s.t0) / s.h;
  const auto& c = s.poly[component];
  return (c[1] + u * (2.0 * c[2] + u * (3.0 * c[3] + u * 4.0 * c[4]))) / s.h;
}

DenseOutput integrate_dopri5(const OdeRhs& rhs, std::vector<double> y, double t0,
                             double t1, const OdeOptions& opts) {
  if (!(t1 > t0)) throw NumericalError("integrate_dopri5: require t1 > t0");
  const std::size_t n = y.size();
  DenseOutput dense(n, t0, t1);

  std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n);
  rhs(t0, y, k1);

  const double span = t1 - t0;
  double h = std::min(1e-3 * span, opts.max_step > 0 ? opts.max_step : span);
  double t = t0;
  long rejected_in_row = 0;
  long steps = 0;

  while (t < t1) {
    if (t + h > t1) h = t1 - t;
    if (++steps > 4'000'000)
      throw NumericalError("integrate_dopri5: step limit exceeded");

    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
    rhs(t + c2 * h, ytmp, k2);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs(t + c3 * h, ytmp, k3);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs(t + c4 * h, ytmp, k4);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs(t + c5 * h, ytmp, k5);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] =
          y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    rhs(t + h, ytmp, k6);
    for (std::size_t i = 0; i < n; ++i)
      ynew[i] =
          y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
    rhs(t + h, ynew, k7);

    double err = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                            e6 * k6[i] + e7 * k7[i]);
      const double sk =
          opts.abs_tol + opts.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err += (e / sk) * (e / sk);
    }
    err = std::sqrt(err / n);

    if (err <= 1.0) {
      DenseOutput::Segment seg;
      seg.t0 = t;
      seg.h = h;
      seg.poly.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double ydiff = ynew[i] - y[i];
        const double r1 = y[i];
        const double r2 = ydiff;
        const double r3 = h * k1[i] - ydiff;
        const double r4 = ydiff - h * k7[i] - r3;
        const double r5 = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                               d6 * k6[i] + d7 * k7[i]);
        // nested contd5 form expanded into monomials of the step variable
        seg.poly[i] = {r1, r2 + r3, r4 + r5 - r3, -r4 - 2.0 * r5, r5};
      }
      dense.add_segment(std::move(seg));
      t += h;
      y = ynew;
      k1 = k7;  // FSAL
      if (opts.monitor) opts.monitor(t, y);
      rejected_in_row = 0;
      double factor = 0.9 * std::pow(std::max(err, 1e-12), -0.2);
      factor = std::clamp(factor, 0.2, 5.0);
      h *= factor;
    } else {
      ++rejected_in_row;
      if (rejected_in_row > 60)
        throw NumericalError("integrate_dopri5: step size underflow");
      h *= std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
    }
    if (opts.max_step > 0) h = std::min(h, opts.max_step);
    if (h < 1e-14 * span) throw NumericalError("integrate_dopri5: step too small");
  }
  return dense;
}

}  // namespace ncosc
