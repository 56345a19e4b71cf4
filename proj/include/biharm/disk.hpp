#pragma once

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "biharm/algebra.hpp"
#include "biharm/holomorphic.hpp"

namespace biharm {

/// Coefficients of the disk Schwartz integral as a finite B-polynomial.
///
/// Expanding (tau+zeta)(tau-zeta)^{-1} = 1 + 2 sum_{n>=1} zeta^n tau^{-n}
/// inside the kernel gives S_D[u](zeta) = M_0 + 2 sum_{n>=1} M_n zeta^n with
///   M_n = hat(u)_n * 1 + ( (n/4) hat(u)_n - ((n+2)/4) hat(u)_{n+2} ) * rho,
/// where hat(u)_n are the complex Fourier coefficients of the trig
/// polynomial u.  All M_n with n > deg(u) vanish, so the integral of finite-
/// degree data is a polynomial in zeta, stable on the whole closed disk.
/// Returns c_n with S = sum c_n zeta^n (c_0 = M_0, c_n = 2 M_n).
inline std::vector<BNumber> disk_schwartz_coefficients(const CircleData& u) {
  const int n = u.degree();
  std::vector<BNumber> c(static_cast<std::size_t>(n) + 1);
  c[0] = from_canonical(u.fourier(0), -0.5 * u.fourier(2));
  for (int k = 1; k <= n; ++k) {
    const Complex alpha = u.fourier(k);
    const Complex beta = 0.25 * (static_cast<double>(k) * alpha -
                                 static_cast<double>(k + 2) * u.fourier(k + 2));
    c[k] = 2.0 * from_canonical(alpha, beta);
  }
  return c;
}

/// Horner evaluation of a B-coefficient polynomial at zeta.
inline BNumber eval_b_polynomial(const std::vector<BNumber>& c, BPoint zeta) {
  if (c.empty()) return {};
  const BNumber z = embed(zeta);
  BNumber acc = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
  return acc;
}

/// Disk Schwartz integral evaluated through the exact moment series; valid
/// on the whole closed disk (on the circle it equals the singular boundary
/// limit).
inline BNumber disk_schwartz_closed_form(const CircleData& u, BPoint zeta) {
  return eval_b_polynomial(disk_schwartz_coefficients(u), zeta);
}

/// Biharmonic Schwartz integral for the unit disk,
///   S_D[u](zeta) = (1/2 pi i) int_{dD} u(tau)(tau+zeta)(tau-zeta)^{-1} tau^{-1} dtau.
inline BNumber biharmonic_schwartz_disk(const CircleData& u, BPoint zeta) {
  if (norm(zeta) >= 1.0) throw DomainError("biharmonic_schwartz_disk: ||zeta|| must be < 1");
  return disk_schwartz_closed_form(u, zeta);
}

/// Direct-definition evaluation: uniform trapezoid rule applied to the
/// B-valued kernel over the parametrized circle.  Spectrally accurate away
/// from the boundary; used by the self test and as the cross-validation
/// route for the closed form.  The table parameter is the self test's
/// negative-control hook.
inline BNumber biharmonic_schwartz_disk_quad(const CircleData& u, BPoint zeta,
                                             int nodes = kDefaultCircleNodes,
                                             const detail::MulTable& table = {}) {
  if (norm(zeta) >= 1.0)
    throw DomainError("biharmonic_schwartz_disk_quad: ||zeta|| must be < 1");
  const BNumber z = embed(zeta);
  BNumber acc{};
  for (int j = 0; j < nodes; ++j) {
    const double th = 2.0 * std::numbers::pi * j / nodes;
    const BPoint tp{std::cos(th), std::sin(th)};
    const BNumber tau = embed(tp);
    const BNumber dtau = {{-tp.y, 0.0}, {tp.x, 0.0}};
    BNumber term = detail::mul(tau + z, inv(tau - z), table);
    term = detail::mul(term, inv(tau), table);
    term = detail::mul(term, dtau, table);
    acc += u.eval(th) * term;
  }
  // (1/2 pi i) * sum * (2 pi / nodes)
  return acc * (1.0 / (static_cast<double>(nodes) * kI));
}

/// Singular boundary values of the disk integral at zeta = e^{i theta}
/// (Cauchy principal value), assembled from spectral pieces:
///   S0[u] e1 - (y/2pi) m2 (e1 + i e2) + ((x/2pi) m2 + (1/2pi) m3)(e2 - i e1),
/// with m_k the contour moments and S0[u](e^{i theta}) = i*conj(u)(theta).
inline BNumber singular_boundary_disk(const CircleData& u, double theta) {
  const Complex m2 = circle_moment(u, 2);
  const Complex m3 = circle_moment(u, 3);
  const double x = std::cos(theta), y = std::sin(theta);
  const double inv2pi = 1.0 / (2.0 * std::numbers::pi);
  const Complex s0 = kI * conjugate_boundary(u, theta);
  const Complex w = x * inv2pi * m2 + inv2pi * m3;
  // e1 + i e2 = {1, i};  e2 - i e1 = {-i, 1}
  return {s0 - y * inv2pi * m2 - kI * w, -kI * y * inv2pi * m2 + w};
}

/// Contour integral of the solvability condition,
///   int_{dD} u1 dx + u3 dy = pi * (a1[u3] - b1[u1]),
/// computed exactly from the first-harmonic Fourier coefficients.
inline double solvability_integral(const CircleData& u1, const CircleData& u3) {
  return std::numbers::pi * (u3.cos_coefficient(1) - u1.sin_coefficient(1));
}

/// Moment coefficients of the closed-form disk solution.
///   A_k, B_k: real/imag parts of (1/2pi) * int u_k / t^2 dt,
///   C_k, D_k: the same for /t^3; b, b1, b2 recombine them.
/// The solvability indicator A1 - B3 satisfies
/// solvability_integral = -2 pi (A1 - B3).
struct MomentSet {
  double A1 = 0, B1 = 0, C1 = 0, D1 = 0;
  double A3 = 0, B3 = 0, C3 = 0, D3 = 0;
  double b = 0, b1 = 0, b2 = 0;
};

inline MomentSet moment_coefficients(const CircleData& u1, const CircleData& u3) {
  const double inv2pi = 1.0 / (2.0 * std::numbers::pi);
  const Complex m2_1 = circle_moment(u1, 2), m3_1 = circle_moment(u1, 3);
  const Complex m2_3 = circle_moment(u3, 2), m3_3 = circle_moment(u3, 3);
  MomentSet m;
  m.A1 = inv2pi * m2_1.real();
  m.B1 = inv2pi * m2_1.imag();
  m.C1 = inv2pi * m3_1.real();
  m.D1 = inv2pi * m3_1.imag();
  m.A3 = inv2pi * m2_3.real();
  m.B3 = inv2pi * m2_3.imag();
  m.C3 = inv2pi * m3_3.real();
  m.D3 = inv2pi * m3_3.imag();
  m.b = -m.A3 - m.B1;
  m.b1 = -m.C3 - m.D1;
  m.b2 = m.D3 - m.C1;
  return m;
}

/// Tolerance for the solvability condition: the condition is an exact
/// identity, numerics need a band proportional to the data size.
inline double solvability_tolerance(const CircleData& u1, const CircleData& u3) {
  return 1e-10 * (1.0 + u1.coefficient_norm() + u3.coefficient_norm());
}

/// General solution of the (1-3)-problem for the unit disk (class M):
///   Phi(zeta) = S_D[u1] e1 + S_D[u3] e2 + b zeta + b1 e1 + b2 e2
///               + i (a zeta + a1 e1 + a2 e2).
/// Interior evaluation goes through the exact moment series; on the circle
/// it routes through the singular boundary values.
struct DiskSolution {
  CircleData u1;
  CircleData u3;
  double a = 0.0, a1 = 0.0, a2 = 0.0;
  MomentSet moments;
  double solvability = 0.0;  // the contour integral, kept for diagnostics
  std::vector<BNumber> series1;  // S_D[u1] coefficients
  std::vector<BNumber> series3;

  /// b zeta + b1 e1 + b2 e2 + i(a zeta + a1 e1 + a2 e2) at (x, y).
  BNumber affine_part(double x, double y) const {
    const Complex ba{moments.b, a};
    return {ba * x + Complex{moments.b1, a1}, ba * y + Complex{moments.b2, a2}};
  }

  BNumber eval(BPoint zeta) const {
    const double r = norm(zeta);
    if (r > 1.0 + 1e-9) throw DomainError("DiskSolution: ||zeta|| must be <= 1");
    if (r >= 1.0 - 1e-12) return boundary_value(std::atan2(zeta.y, zeta.x));
    const BNumber s1 = eval_b_polynomial(series1, zeta);
    const BNumber s3 = eval_b_polynomial(series3, zeta);
    return s1 * e1() + s3 * e2() + affine_part(zeta.x, zeta.y);
  }

  /// Limiting value on the circle at angle theta (Cauchy PV route).
  BNumber boundary_value(double theta) const {
    const BNumber b1v = u1.eval(theta) * e1() + singular_boundary_disk(u1, theta);
    const BNumber b3v = u3.eval(theta) * e1() + singular_boundary_disk(u3, theta);
    return b1v * e1() + b3v * e2() + affine_part(std::cos(theta), std::sin(theta));
  }

  /// Residual summary: worst boundary-data mismatch of the interior field
  /// sampled at radius r.
  double boundary_residual(double r = 0.999, int samples = 32) const {
    double worst = 0.0;
    for (int j = 0; j < samples; ++j) {
      const double th = 2.0 * std::numbers::pi * j / samples;
      const auto u = components(eval({r * std::cos(th), r * std::sin(th)}));
      worst = std::max(worst, std::abs(u[0] - u1.eval(th)));
      worst = std::max(worst, std::abs(u[2] - u3.eval(th)));
    }
    return worst;
  }
};

/// Solves the (1-3)-problem on the disk; throws UnsolvableError (carrying
/// the contour integral) when the solvability condition fails.
inline DiskSolution solve_13_disk(CircleData u1, CircleData u3, double a = 0.0,
                                  double a1 = 0.0, double a2 = 0.0) {
  const double sv = solvability_integral(u1, u3);
  if (std::abs(sv) > solvability_tolerance(u1, u3)) throw UnsolvableError(sv);
  DiskSolution sol;
  sol.moments = moment_coefficients(u1, u3);
  sol.solvability = sv;
  sol.series1 = disk_schwartz_coefficients(u1);
  sol.series3 = disk_schwartz_coefficients(u3);
  sol.u1 = std::move(u1);
  sol.u3 = std::move(u3);
  sol.a = a;
  sol.a1 = a1;
  sol.a2 = a2;
  return sol;
}

/// Scalar solution of the main biharmonic problem: V is the first component
/// of the monogenic primitive Psi of the (1-3)-solution Phi (free constants
/// zero), normalized by V(0,0) = 0.  Then dV/dx -> u1 and dV/dy -> u3 on the
/// circle.
struct MainBiharmonicSolution {
  DiskSolution phi;
  int primitive_nodes = 64;

  /// Psi(zeta) = int_0^zeta Phi, taken along the radial segment
  /// (path independence follows from the Cauchy-theorem analogue).
  BNumber primitive(BPoint zeta) const {
    const QuadratureRule& rule = gauss_legendre(primitive_nodes);
    BNumber acc{};
    for (int j = 0; j < primitive_nodes; ++j) {
      const double s = 0.5 * (rule.nodes[j] + 1.0);
      acc += (0.5 * rule.weights[j]) * phi.eval({s * zeta.x, s * zeta.y});
    }
    return acc * embed(zeta);
  }

  double eval(double x, double y) const { return primitive({x, y}).z1.real(); }
};

inline MainBiharmonicSolution solve_main_biharmonic(CircleData u1, CircleData u3) {
  return {solve_13_disk(std::move(u1), std::move(u3), 0.0, 0.0, 0.0), 64};
}

}  // namespace biharm
