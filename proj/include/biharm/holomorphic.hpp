#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "biharm/boundary_data.hpp"
#include "biharm/errors.hpp"
#include "biharm/quadrature.hpp"

namespace biharm {

/// Holomorphic extension of CircleData into the unit disk (complex Schwartz
/// integral): F(z) = a0 + sum_{n>=1} (a_n - i b_n) z^n, so that Re F = u on
/// the circle and Im F(0) = 0.
inline Complex schwartz_disk(const CircleData& u, Complex z) {
  if (std::abs(z) >= 1.0) throw DomainError("schwartz_disk: |z| must be < 1");
  Complex acc{0.0, 0.0};
  for (int n = u.degree(); n >= 1; --n) acc = (acc + 2.0 * u.fourier(n)) * z;
  return u.a0 + acc;
}

/// Boundary trace of the conjugate function,
///   conj(u)(theta) = sum_{n>=1} (a_n sin n*theta - b_n cos n*theta).
/// The singular boundary integral of the disk kernel satisfies
/// S0[u](e^{i theta}) = i * conj(u)(theta).
inline double conjugate_boundary(const CircleData& u, double theta) {
  double s = 0.0;
  for (int n = 1; n <= u.degree(); ++n)
    s += u.cos_coefficient(n) * std::sin(n * theta) - u.sin_coefficient(n) * std::cos(n * theta);
  return s;
}

/// Contour moment over the unit circle: integral of u(t)/t^k dt
///   = i*pi*(a_{k-1} - i b_{k-1})  for k >= 2 (zero when the coefficient is absent).
inline Complex circle_moment(const CircleData& u, int k) {
  if (k < 2) throw DomainError("circle_moment: k must be >= 2");
  return kI * std::numbers::pi *
         Complex{u.cos_coefficient(k - 1), -u.sin_coefficient(k - 1)};
}

/// Complex Schwartz integral for the upper half-plane,
///   S[u](z) = (1/pi i) int u(t) (1+tz) / ((t^2+1)(t-z)) dt,   Im z > 0,
/// with Re S[u] -> u on R and the gauge Im S[u](i) = 0.
///
/// Computed on the pullback angle (t = tan(phi), the kernel times dt
/// collapses to (1+tz)/(t-z) dphi) after subtracting u(Re z); the subtracted
/// kernel integrates to exactly 1, which keeps the rule accurate down to
/// small Im z.
inline Complex schwartz_halfplane(const LineData& u, Complex z,
                                  int nodes = kDefaultLineNodes) {
  if (z.imag() <= 0.0) throw DomainError("schwartz_halfplane: Im z must be > 0");
  const double x = z.real();
  const double ux = u.eval(x);
  const double half_pi = 0.5 * std::numbers::pi;
  const QuadratureRule& rule = gauss_legendre(nodes);
  Complex acc{0.0, 0.0};
  for (int j = 0; j < nodes; ++j) {
    const double phi = half_pi * rule.nodes[j];
    const double t = std::tan(phi);
    const double diff = u.eval_angle(2.0 * phi) - ux;
    acc += rule.weights[j] * diff * (1.0 + t * z) / (t - z);
  }
  acc *= half_pi;
  return ux + acc / (std::numbers::pi * kI);
}

/// Principal-value boundary term of the half-plane Schwartz integral,
///   (1/pi i) PV int u(t)/(t^2+1) * (1+t xi)/(t-xi) dt,
/// computed through the absolutely convergent subtraction-regularized form
///   (1/pi i) int (u(t) - u(xi)) [1/(t-xi) - t/(t^2+1)] dt
/// (the symmetric PV of the kernel itself vanishes).
inline Complex line_pv_boundary(const LineData& u, double xi,
                                int nodes = kDefaultLineNodes) {
  const double uxi = u.eval(xi);
  const double half_pi = 0.5 * std::numbers::pi;
  const QuadratureRule& rule = gauss_legendre(nodes);
  const double guard = 1e-9 * (1.0 + std::abs(xi));
  double acc = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double phi = half_pi * rule.nodes[j];
    const double t = std::tan(phi);
    // (1/(t-xi) - t/(t^2+1)) * (1+t^2) = (1+t*xi)/(t-xi)
    double val;
    if (std::abs(t - xi) < guard) {
      val = u.derivative(xi) * (1.0 + t * xi);
    } else {
      val = (u.eval_angle(2.0 * phi) - uxi) * (1.0 + t * xi) / (t - xi);
    }
    acc += rule.weights[j] * val;
  }
  return Complex{half_pi * acc, 0.0} / (std::numbers::pi * kI);
}

/// Absolutely convergent correction integral of the half-plane theory:
///   int u(t)/(t-z)^2 dt,   Im z > 0.
/// The constant part of u drops out exactly (the antiderivative vanishes at
/// +-inf), so u(Re z) is subtracted for near-axis stability.
inline Complex hp_second_kernel(const LineData& u, Complex z,
                                int nodes = kDefaultLineNodes) {
  if (z.imag() <= 0.0) throw DomainError("hp_second_kernel: Im z must be > 0");
  const double ux = u.eval(z.real());
  const double half_pi = 0.5 * std::numbers::pi;
  const QuadratureRule& rule = gauss_legendre(nodes);
  Complex acc{0.0, 0.0};
  for (int j = 0; j < nodes; ++j) {
    const double phi = half_pi * rule.nodes[j];
    const double t = std::tan(phi);
    const double diff = u.eval_angle(2.0 * phi) - ux;
    const Complex tz = t - z;
    acc += rule.weights[j] * diff * (1.0 + t * t) / (tz * tz);
  }
  return half_pi * acc;
}

}  // namespace biharm
