#pragma once

#include <array>
#include <functional>
#include <vector>

namespace ncosc {

// y' = f(t, y), y and dydt of equal small dimension.
using OdeRhs =
    std::function<void(double t, const std::vector<double>& y, std::vector<double>& dydt)>;

// Called after every accepted step with the new (t, y); may throw to abort.
using StepMonitor = std::function<void(double t, const std::vector<double>& y)>;

struct OdeOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_step = 0.0;  // 0 = unrestricted
  StepMonitor monitor;
};

// Continuous extension of a Dormand-Prince 5(4) integration: one quartic
// polynomial per component per accepted step. The time derivative of the
// interpolant is available analytically, which is what the Ermakov-Pinney
// residual of numeric solutions is built from.
class DenseOutput {
 public:
  struct Segment {
    double t0 = 0, h = 0;
    // monomial coefficients in the normalized step variable, per component
    std::vector<std::array<double, 5>> poly;
  };

  DenseOutput() = default;
  DenseOutput(std::size_t dim, double t_begin, double t_end)
      : dim_(dim), t_begin_(t_begin), t_end_(t_end) {}

  std::size_t dim() const { return dim_; }
  double t_begin() const { return t_begin_; }
  double t_end() const { return t_end_; }

  double value(double t, std::size_t component) const;
  double derivative(double t, std::size_t component) const;

  void add_segment(Segment s) { segments_.push_back(std::move(s)); }
  std::size_t segment_count() const { return segments_.size(); }

 private:
  const Segment& locate(double t) const;

  std::size_t dim_ = 0;
  double t_begin_ = 0, t_end_ = 0;
  std::vector<Segment> segments_;
};

// Adaptive DOPRI5 from t0 to t1 (t1 > t0) with dense output.
DenseOutput integrate_dopri5(const OdeRhs& rhs, std::vector<double> y0, double t0,
                             double t1, const OdeOptions& opts = {});

}  // namespace ncosc
