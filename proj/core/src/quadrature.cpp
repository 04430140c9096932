#include "ncosc/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stack>

#include "ncosc/errors.hpp"

namespace ncosc {

namespace {

GaussRule compute_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int mid = (n + 1) / 2;
  for (int i = 0; i < mid; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  static std::map<int, GaussRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

GaussRule gauss_legendre_mapped(int n, double a, double b) {
  const GaussRule& base = gauss_legendre(n);
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = mid + half * base.nodes[i];
    rule.weights[i] = half * base.weights[i];
  }
  return rule;
}

namespace {

double gauss15(const std::function<double(double)>& f, double a, double b) {
  const GaussRule& rule = gauss_legendre(15);
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  double sum = 0;
  for (int i = 0; i < 15; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

}  // namespace

double adaptive_quad(const std::function<double(double)>& f, double a, double b,
                     double tol) {
  if (a == b) return 0.0;
  struct Panel {
    double a, b, whole;
    int depth;
  };
  std::stack<Panel> panels;
  panels.push({a, b, gauss15(f, a, b), 0});
  double total = 0;
  double worst = 0;
  long evaluations = 1;
  while (!panels.empty()) {
    const Panel p = panels.top();
    panels.pop();
    const double m = 0.5 * (p.a + p.b);
    const double left = gauss15(f, p.a, m);
    const double right = gauss15(f, m, p.b);
    evaluations += 2;
    const double err = std::abs(left + right - p.whole);
    const double local_tol = tol * std::max(1.0, std::abs(left + right)) *
                             std::max(std::abs(p.b - p.a) / std::abs(b - a), 1e-3);
    if (err < local_tol || p.depth >= 48) {
      if (p.depth >= 48) worst = std::max(worst, err);
      total += left + right;
    } else {
      panels.push({p.a, m, left, p.depth + 1});
      panels.push({m, p.b, right, p.depth + 1});
    }
    if (evaluations > 4'000'000)
      throw QuadratureError("adaptive_quad: subdivision limit exceeded", err);
  }
  if (worst > 1e3 * tol)
    throw QuadratureError("adaptive_quad: requested tolerance not reached", worst);
  return total;
}

}  // namespace ncosc
