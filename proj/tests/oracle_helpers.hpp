#pragma once

// Test-only oracles: independent quadrature and residue routes used to
// freeze expected values and cross-validate the spectral assemblies.  None
// of these are called by library code.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "biharm/biharm.hpp"

namespace oracle {

using namespace biharm;

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

inline double uniform(std::mt19937_64& rng, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng);
}

inline BNumber random_bnumber(std::mt19937_64& rng, double amp = 2.0) {
  return {{uniform(rng, -amp, amp), uniform(rng, -amp, amp)},
          {uniform(rng, -amp, amp), uniform(rng, -amp, amp)}};
}

/// Random element bounded away from the zero-divisor cone.
inline BNumber random_invertible(std::mt19937_64& rng, double amp = 2.0) {
  for (;;) {
    const BNumber a = random_bnumber(rng, amp);
    if (std::abs(to_canonical(a).alpha) > 0.05 * norm(a) && norm(a) > 1e-3) return a;
  }
}

/// Trig polynomial with coefficients of size ~amp/n^2 (gentle slope).
inline CircleData random_circle(std::mt19937_64& rng, int degree, double amp) {
  CircleData u;
  u.a0 = uniform(rng, -amp, amp);
  for (int n = 1; n <= degree; ++n) {
    u.cos_coef.push_back(uniform(rng, -amp, amp) / (n * n));
    u.sin_coef.push_back(uniform(rng, -amp, amp) / (n * n));
  }
  return u;
}

inline LineData random_line(std::mt19937_64& rng, int degree, double amp) {
  return {random_circle(rng, degree, amp)};
}

/// The rational datum u(t) = 1/(1+t^2) expressed exactly in the line class:
/// 1/(1+t^2) = (1 + cos theta)/2 with theta = 2*atan(t).
inline LineData lorentzian_line() { return {CircleData{0.5, {0.5}, {}}}; }

/// Residue closed form: S[1/(1+t^2)](z) = 1/(1 - i z) on Im z > 0.
inline Complex lorentzian_schwartz(Complex z) { return 1.0 / (1.0 - kI * z); }

/// Residue closed form for the correction integral of the same datum:
/// int dt /((1+t^2)(t-z)^2) = pi/(i-z)^2 - 4 pi i z/(1+z^2)^2 for z != i,
/// and -pi/4 at the triple-pole point z = i.
inline Complex lorentzian_second_kernel(Complex z) {
  if (std::abs(z - kI) < 1e-9) return {-std::numbers::pi / 4.0, 0.0};
  const Complex a = kI - z;
  const Complex b = 1.0 + z * z;
  return std::numbers::pi / (a * a) - 4.0 * std::numbers::pi * kI * z / (b * b);
}

/// Direct trapezoid quadrature of the complex disk Schwartz kernel.
inline Complex schwartz_disk_quad(const CircleData& u, Complex z, int nodes = 4096) {
  Complex acc{0.0, 0.0};
  for (int j = 0; j < nodes; ++j) {
    const double th = 2.0 * std::numbers::pi * j / nodes;
    const Complex t = std::exp(kI * th);
    acc += u.eval(th) * (t + z) / (t - z);
  }
  return acc / static_cast<double>(nodes);
}

/// Trapezoid quadrature of the contour moment int u(t)/t^k dt.
inline Complex circle_moment_quad(const CircleData& u, int k, int nodes = 4096) {
  Complex acc{0.0, 0.0};
  for (int j = 0; j < nodes; ++j) {
    const double th = 2.0 * std::numbers::pi * j / nodes;
    const Complex t = std::exp(kI * th);
    acc += u.eval(th) * kI * t / std::pow(t, k);
  }
  return acc * (2.0 * std::numbers::pi / nodes);
}

/// eps-excluded principal value of the singular circle integral S0[u] at
/// the boundary point e^{i theta} (chord-distance exclusion, graded panels).
inline Complex s0_excluded(const CircleData& u, double theta, double eps) {
  const Complex z = std::exp(kI * theta);
  const double delta = 2.0 * std::asin(0.5 * eps);
  auto f = [&](double d) {
    const Complex t = std::exp(kI * (theta + d));
    return Complex{u.eval(theta + d), 0.0} * (t + z) / (t - z);
  };
  Complex acc{0.0, 0.0};
  for (double sign : {1.0, -1.0}) {
    double lo = delta;
    while (lo < std::numbers::pi) {
      const double hi = std::min(2.0 * lo, std::numbers::pi);
      acc += gl_integrate([&](double d) { return f(sign * d); }, lo, hi, 24);
      lo = hi;
    }
  }
  return acc / (2.0 * std::numbers::pi);
}

inline Complex s0_extrapolated(const CircleData& u, double theta) {
  const Complex p1 = s0_excluded(u, theta, 1e-2);
  const Complex p2 = s0_excluded(u, theta, 1e-3);
  return (1e-2 * p2 - 1e-3 * p1) / (1e-2 - 1e-3);
}

/// eps-excluded principal value of the line PV term of the boundary formula,
/// graded panels out to |t - xi| = 1e8.
inline Complex line_pv_excluded(const LineData& u, double xi, double eps) {
  auto f = [&](double t) {
    return u.eval(t) / (1.0 + t * t) * (1.0 + t * xi) / (t - xi);
  };
  double acc = 0.0;
  for (double sign : {1.0, -1.0}) {
    double lo = eps;
    while (lo < 1e8) {
      const double hi = std::min(2.0 * lo, 1e8);
      acc += gl_integrate([&](double d) { return f(xi + sign * d); }, lo, hi, 24);
      lo = hi;
    }
  }
  return Complex{acc, 0.0} / (std::numbers::pi * kI);
}

inline Complex line_pv_extrapolated(const LineData& u, double xi) {
  const Complex p1 = line_pv_excluded(u, xi, 1e-2);
  const Complex p2 = line_pv_excluded(u, xi, 1e-3);
  return (1e-2 * p2 - 1e-3 * p1) / (1e-2 - 1e-3);
}

/// Direct B-valued quadrature of the half-plane kernel
///   (1/pi i) int u(t) (1+t zeta)(t^2+1)^{-1} (t-zeta)^{-1} dt
/// in the pullback angle; oracle for the complex-pieces assembly.
inline BNumber halfplane_direct_quad(const LineData& u, BPoint zeta, int nodes = 512) {
  const double half_pi = 0.5 * std::numbers::pi;
  const QuadratureRule& rule = gauss_legendre(nodes);
  const BNumber z = embed(zeta);
  BNumber acc{};
  for (int j = 0; j < nodes; ++j) {
    const double phi = half_pi * rule.nodes[j];
    const double t = std::tan(phi);
    const BNumber tb = embed({t, 0.0});
    const BNumber kern = (e1() + tb * z) * inv(tb - z);
    acc += (rule.weights[j] * u.eval_angle(2.0 * phi)) * kern;
  }
  return acc * (half_pi / (std::numbers::pi * kI));
}

/// Primitive along the two-leg staircase path (0,0) -> (x,0) -> (x,y).
inline BNumber staircase_primitive(const DiskSolution& phi, BPoint p, int nodes = 48) {
  BNumber acc{};
  if (p.x != 0.0)
    acc += gl_integrate([&](double s) { return phi.eval({s, 0.0}); }, 0.0, p.x, nodes) * e1();
  if (p.y != 0.0)
    acc += gl_integrate([&](double s) { return phi.eval({p.x, s}); }, 0.0, p.y, nodes) * e2();
  return acc;
}

}  // namespace oracle
