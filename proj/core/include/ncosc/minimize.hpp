#pragma once

#include <functional>
#include <vector>

namespace ncosc {

struct MinimumResult {
  double x = 0;
  double value = 0;
};

// Golden-section search on [lo, hi]; assumes a unimodal objective.
MinimumResult golden_section(const std::function<double(double)>& f, double lo,
                             double hi, double x_tol = 1e-8);

struct ScanResult {
  std::vector<double> xs;
  std::vector<double> values;
  int argmin = 0;
  bool unimodal = false;       // exactly one interior local minimum sampled
  bool interior_min = false;   // argmin not at either end point
};

ScanResult scan_minimum(const std::function<double(double)>& f, double lo,
                        double hi, int points);

}  // namespace ncosc
