#pragma once

#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace biharm {

/// Default node count for the line (Gauss-Legendre) quadratures.
inline constexpr int kDefaultLineNodes = 512;
/// Default node count for trapezoid rules on the circle.
inline constexpr int kDefaultCircleNodes = 1024;

struct QuadratureRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;  // sum to 2
};

namespace detail {

inline QuadratureRule make_gauss_legendre(int n) {
  QuadratureRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const double pi = 3.14159265358979323846;
  for (int k = 0; k < (n + 1) / 2; ++k) {
    double x = std::cos(pi * (k + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Legendre recurrence for P_n(x) and P_n'(x).
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[k] = -x;
    r.weights[k] = w;
    r.nodes[n - 1 - k] = x;
    r.weights[n - 1 - k] = w;
  }
  return r;
}

}  // namespace detail

/// Shared, lazily built Gauss-Legendre rule on [-1, 1].  Tables are
/// immutable after construction and safe to use from any thread.
inline const QuadratureRule& gauss_legendre(int n) {
  if (n < 2) throw std::invalid_argument("gauss_legendre: need n >= 2");
  static std::mutex mu;
  static std::unordered_map<int, std::unique_ptr<const QuadratureRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::make_unique<const QuadratureRule>(detail::make_gauss_legendre(n)))
             .first;
  return *it->second;
}

/// Integrate f over [a, b] with an n-node Gauss-Legendre rule.
template <class F>
auto gl_integrate(F&& f, double a, double b, int n) {
  const QuadratureRule& rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  auto acc = decltype(f(a))();
  for (int j = 0; j < n; ++j) acc += rule.weights[j] * f(mid + half * rule.nodes[j]);
  return half * acc;
}

}  // namespace biharm
