#pragma once

#include <cmath>
#include <numbers>

#include "biharm/algebra.hpp"
#include "biharm/holomorphic.hpp"

namespace biharm {

/// Below this height, interior evaluation switches to the boundary-value
/// formula at the projected abscissa: the correction kernel is O(1/y)
/// conditioned even though its product with y tends to zero.
inline constexpr double kBoundarySwitchY = 1e-6;

/// Biharmonic Schwartz integral for the half-plane, assembled from the
/// complex pieces:
///   S_hp[u](zeta) = S[u](z) e1 - (y / 2 pi) rho * int u(t)/(t-z)^2 dt,
/// with z = x + iy.  The result is monogenic in y > 0.
inline BNumber biharmonic_schwartz_halfplane(const LineData& u, BPoint zeta,
                                             int nodes = kDefaultLineNodes) {
  if (zeta.y <= 0.0) throw DomainError("biharmonic_schwartz_halfplane: y must be > 0");
  const Complex z = to_complex(zeta);
  const Complex s = schwartz_halfplane(u, z, nodes);
  const Complex c = (zeta.y / (2.0 * std::numbers::pi)) * hp_second_kernel(u, z, nodes);
  // s*e1 - c*rho, rho = 2e1 + 2i e2
  return {s - 2.0 * c, -2.0 * kI * c};
}

/// Boundary limit of the biharmonic Schwartz integral at finite xi:
///   (u(xi) + PV-term) * e1, a complex multiple of e1.
inline BNumber boundary_value_halfplane(const LineData& u, double xi,
                                        int nodes = kDefaultLineNodes) {
  const Complex v = u.eval(xi) + line_pv_boundary(u, xi, nodes);
  return {v, {0.0, 0.0}};
}

/// Limit of the integral as ||zeta|| -> inf:
///   (u(inf) - (1/pi i) PV int u(t) t/(t^2+1) dt) * e1,
/// regularized by subtracting u(inf) (the symmetric PV of t/(t^2+1) vanishes;
/// in the pullback angle the kernel times dt is just tan(phi)).
inline BNumber limit_at_infinity(const LineData& u, int nodes = kDefaultLineNodes) {
  const double uinf = u.at_infinity();
  const double half_pi = 0.5 * std::numbers::pi;
  const QuadratureRule& rule = gauss_legendre(nodes);
  double acc = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double phi = half_pi * rule.nodes[j];
    acc += rule.weights[j] * (u.eval_angle(2.0 * phi) - uinf) * std::tan(phi);
  }
  const Complex v = uinf - Complex{half_pi * acc, 0.0} / (std::numbers::pi * kI);
  return {v, {0.0, 0.0}};
}

/// General solution of the (1-3)-problem for the upper half-plane:
///   Phi(zeta) = S_hp[u1](zeta) e1 + S_hp[u3](zeta) e2 + a1 i e1 + a2 i e2.
/// On the boundary the components satisfy U1 -> u1(xi), U3 -> u3(xi);
/// the problem is solvable unconditionally.
struct HalfplaneSolution {
  LineData u1;
  LineData u3;
  double a1 = 0.0;
  double a2 = 0.0;
  int nodes = kDefaultLineNodes;

  BNumber homogeneous_part() const { return {{0.0, a1}, {0.0, a2}}; }

  BNumber eval(BPoint zeta) const {
    if (zeta.y < 0.0) throw DomainError("HalfplaneSolution: y must be >= 0");
    if (zeta.y < kBoundarySwitchY) return boundary_value(zeta.x);
    const BNumber s1 = biharmonic_schwartz_halfplane(u1, zeta, nodes);
    const BNumber s3 = biharmonic_schwartz_halfplane(u3, zeta, nodes);
    return s1 * e1() + s3 * e2() + homogeneous_part();
  }

  BNumber boundary_value(double xi) const {
    const BNumber b1 = boundary_value_halfplane(u1, xi, nodes);
    const BNumber b3 = boundary_value_halfplane(u3, xi, nodes);
    return b1 * e1() + b3 * e2() + homogeneous_part();
  }

  BNumber value_at_infinity() const {
    return limit_at_infinity(u1, nodes) * e1() + limit_at_infinity(u3, nodes) * e2() +
           homogeneous_part();
  }

  /// Residual summary: worst boundary-data mismatch of the interior field
  /// sampled at height y over [-extent, extent].
  double boundary_residual(double y = 1e-4, int samples = 16, double extent = 5.0) const {
    double worst = 0.0;
    for (int j = 0; j < samples; ++j) {
      const double xi = -extent + 2.0 * extent * j / (samples - 1);
      const auto u = components(eval({xi, y}));
      worst = std::max(worst, std::abs(u[0] - u1.eval(xi)));
      worst = std::max(worst, std::abs(u[2] - u3.eval(xi)));
    }
    return worst;
  }
};

inline HalfplaneSolution solve_13_halfplane(LineData u1, LineData u3, double a1 = 0.0,
                                            double a2 = 0.0, int nodes = kDefaultLineNodes) {
  return {std::move(u1), std::move(u3), a1, a2, nodes};
}

}  // namespace biharm
