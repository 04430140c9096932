#include "ncosc/minimize.hpp"

#include <cmath>

namespace ncosc {

MinimumResult golden_section(const std::function<double(double)>& f, double lo,
                             double hi, double x_tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > x_tol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

ScanResult scan_minimum(const std::function<double(double)>& f, double lo, double hi,
                        int points) {
  ScanResult scan;
  scan.xs.resize(points);
  scan.values.resize(points);
  for (int i = 0; i < points; ++i) {
    scan.xs[i] = lo + (hi - lo) * i / (points - 1);
    scan.values[i] = f(scan.xs[i]);
    if (scan.values[i] < scan.values[scan.argmin]) scan.argmin = i;
  }
  int interior_minima = 0;
  for (int i = 1; i + 1 < points; ++i)
    if (scan.values[i] < scan.values[i - 1] && scan.values[i] <= scan.values[i + 1])
      ++interior_minima;
  scan.interior_min = scan.argmin > 0 && scan.argmin < points - 1;
  scan.unimodal = interior_minima == 1 && scan.interior_min;
  return scan;
}

}  // namespace ncosc
