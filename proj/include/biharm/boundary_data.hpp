#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "biharm/algebra.hpp"

namespace biharm {

/// Real trigonometric polynomial on the unit circle,
///   u(theta) = a0 + sum_{n=1..N} (a_n cos n*theta + b_n sin n*theta).
///
/// Finite degree makes the modulus of continuity Lipschitz, so the Dini
/// integrability hypotheses of the boundary integrals hold by construction.
struct CircleData {
  double a0 = 0.0;
  std::vector<double> cos_coef;  // a_1 .. a_N
  std::vector<double> sin_coef;  // b_1 .. b_N

  int degree() const {
    return static_cast<int>(std::max(cos_coef.size(), sin_coef.size()));
  }

  double cos_coefficient(int n) const {
    if (n == 0) return a0;
    return (n >= 1 && n <= static_cast<int>(cos_coef.size())) ? cos_coef[n - 1] : 0.0;
  }

  double sin_coefficient(int n) const {
    return (n >= 1 && n <= static_cast<int>(sin_coef.size())) ? sin_coef[n - 1] : 0.0;
  }

  /// Complex Fourier coefficient: hat(0) = a0, hat(n) = (a_n - i b_n)/2 for n >= 1.
  Complex fourier(int n) const {
    if (n == 0) return {a0, 0.0};
    return 0.5 * Complex{cos_coefficient(n), -sin_coefficient(n)};
  }

  double eval(double theta) const {
    double s = a0;
    const int n = degree();
    for (int k = 1; k <= n; ++k)
      s += cos_coefficient(k) * std::cos(k * theta) + sin_coefficient(k) * std::sin(k * theta);
    return s;
  }

  /// d/dtheta of the polynomial.
  double derivative(double theta) const {
    double s = 0.0;
    const int n = degree();
    for (int k = 1; k <= n; ++k)
      s += k * (-cos_coefficient(k) * std::sin(k * theta) + sin_coefficient(k) * std::cos(k * theta));
    return s;
  }

  /// l1 coefficient norm; an upper bound for sup |u|.
  double coefficient_norm() const {
    double s = std::abs(a0);
    for (double c : cos_coef) s += std::abs(c);
    for (double c : sin_coef) s += std::abs(c);
    return s;
  }
};

/// Boundary datum on the extended real line, represented as a trigonometric
/// polynomial composed with the pullback angle theta(t) = 2*atan(t).
///
/// u is continuous on R with the finite limit u(inf) = pullback(pi)
/// (= pullback(-pi) by periodicity), and smoothness of the pullback gives
/// both Dini conditions of the half-plane theory automatically.
struct LineData {
  CircleData pullback;

  double eval(double t) const { return pullback.eval(2.0 * std::atan(t)); }

  /// Evaluate through the pullback angle directly (theta = 2*atan(t)).
  double eval_angle(double theta) const { return pullback.eval(theta); }

  double at_infinity() const { return pullback.eval(std::numbers::pi); }

  /// du/dt = pullback'(theta(t)) * 2/(1+t^2).
  double derivative(double t) const {
    return pullback.derivative(2.0 * std::atan(t)) * 2.0 / (1.0 + t * t);
  }

  double coefficient_norm() const { return pullback.coefficient_norm(); }
};

}  // namespace biharm
