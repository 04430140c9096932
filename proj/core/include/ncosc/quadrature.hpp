#pragma once

#include <functional>
#include <vector>

namespace ncosc {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Gauss-Legendre rule of order n, computed by Newton iteration on the
// Legendre polynomial and cached per n.
const GaussRule& gauss_legendre(int n);

// Nodes/weights of gauss_legendre(n) mapped to [a, b].
GaussRule gauss_legendre_mapped(int n, double a, double b);

// Adaptive bisection with a 15-point Gauss panel; the error estimate of a
// panel is the difference against its two halves. Throws QuadratureError
// when the subdivision limit is hit before reaching tol.
double adaptive_quad(const std::function<double(double)>& f, double a, double b,
                     double tol = 1e-12);

}  // namespace ncosc
