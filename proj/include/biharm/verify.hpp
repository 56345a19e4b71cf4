#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <utility>
#include <vector>

#include "biharm/algebra.hpp"
#include "biharm/disk.hpp"
#include "biharm/halfplane.hpp"

namespace biharm {

using FieldEval = std::function<BNumber(BPoint)>;

enum class Domain { halfplane, disk };

/// A field under test together with the finite-difference step and the
/// region its probes must respect.
struct FieldProbe {
  FieldEval field;
  Domain domain = Domain::disk;
  double h = 1e-4;
};

namespace detail {

/// All stencil points (offset <= reach from the center) must stay inside
/// the domain by at least 2h, i.e. the center needs reach + 2h of room.
inline void require_margin(Domain domain, BPoint p, double room) {
  if (domain == Domain::halfplane) {
    if (p.y < room) throw RegionError("probe too close to the real axis");
  } else {
    if (norm(p) > 1.0 - room) throw RegionError("probe too close to the circle");
  }
}

}  // namespace detail

/// Residual of the Cauchy-Riemann condition dPhi/dy = (dPhi/dx) e2, using
/// centered differences with step probe.h; O(h^2) for monogenic fields.
inline double cr_residual(const FieldProbe& probe, BPoint zeta) {
  const double h = probe.h;
  detail::require_margin(probe.domain, zeta, 3.0 * h);
  const double inv2h = 0.5 / h;
  const BNumber dx =
      inv2h * (probe.field({zeta.x + h, zeta.y}) - probe.field({zeta.x - h, zeta.y}));
  const BNumber dy =
      inv2h * (probe.field({zeta.x, zeta.y + h}) - probe.field({zeta.x, zeta.y - h}));
  return norm(dy - dx * e2());
}

/// 13-point discretization of the squared Laplacian, divided by h^4.
/// Exact on polynomials of degree <= 5; signed value.
template <class F>
double biharmonic_residual(F&& U, double x, double y, double h) {
  const double center = 20.0 * U(x, y);
  const double edge = -8.0 * (U(x + h, y) + U(x - h, y) + U(x, y + h) + U(x, y - h));
  const double diag =
      2.0 * (U(x + h, y + h) + U(x + h, y - h) + U(x - h, y + h) + U(x - h, y - h));
  const double far =
      U(x + 2 * h, y) + U(x - 2 * h, y) + U(x, y + 2 * h) + U(x, y - 2 * h);
  return (center + edge + diag + far) / (h * h * h * h);
}

/// Magnitude reference for the stencil test: 1 + sup |U| over the stencil.
template <class F>
double biharmonic_scale(F&& U, double x, double y, double h) {
  double m = 0.0;
  const double offs[13][2] = {{0, 0},  {h, 0},   {-h, 0}, {0, h},  {0, -h},  {h, h},   {h, -h},
                              {-h, h}, {-h, -h}, {2 * h, 0}, {-2 * h, 0}, {0, 2 * h}, {0, -2 * h}};
  for (const auto& o : offs) m = std::max(m, std::abs(U(x + o[0], y + o[1])));
  return 1.0 + m;
}

/// Pair of complex polynomials (ascending coefficients) generating a
/// monogenic field via Phi = F(z) e1 - ((iy/2) F'(z) - F0(z)) rho.
struct HolomorphicPair {
  std::vector<Complex> f;
  std::vector<Complex> f0;

  static Complex eval_poly(const std::vector<Complex>& c, Complex z) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
    return acc;
  }

  static Complex eval_poly_derivative(const std::vector<Complex>& c, Complex z) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = c.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * c[k];
    return acc;
  }

  int degree() const {
    return static_cast<int>(std::max(f.size(), f0.size())) - 1;
  }
};

namespace detail {

inline BNumber assemble_monogenic(Complex f, Complex fprime, Complex f0, double y) {
  const Complex c = 0.5 * kI * y * fprime - f0;  // coefficient of rho, with its sign
  return {f - 2.0 * c, -2.0 * kI * c};
}

}  // namespace detail

/// Evaluator of the monogenic field generated by a polynomial pair; passes
/// the Cauchy-Riemann residual check by construction.
inline FieldEval monogenic_from_holomorphic(HolomorphicPair p) {
  return [p = std::move(p)](BPoint zeta) {
    const Complex z = to_complex(zeta);
    return detail::assemble_monogenic(HolomorphicPair::eval_poly(p.f, z),
                                      HolomorphicPair::eval_poly_derivative(p.f, z),
                                      HolomorphicPair::eval_poly(p.f0, z), zeta.y);
  };
}

/// Polynomial pair in the Cayley variable w = (z - i)/(z + i): generates
/// monogenic fields on the half-plane that are bounded at infinity and whose
/// boundary traces are exactly trig polynomials in the pullback angle
/// (w = -e^{i theta} on the real line).
struct CayleyPair {
  std::vector<Complex> g;
  std::vector<Complex> g0;

  int degree() const { return static_cast<int>(std::max(g.size(), g0.size())) - 1; }

  /// U1 trace as a function of the pullback angle.
  double trace_u1(double theta) const {
    const Complex w = -std::exp(kI * theta);
    return (HolomorphicPair::eval_poly(g, w) + 2.0 * HolomorphicPair::eval_poly(g0, w)).real();
  }

  /// U3 trace as a function of the pullback angle.
  double trace_u3(double theta) const {
    const Complex w = -std::exp(kI * theta);
    return -2.0 * HolomorphicPair::eval_poly(g0, w).imag();
  }
};

inline FieldEval monogenic_from_cayley(CayleyPair p) {
  return [p = std::move(p)](BPoint zeta) {
    const Complex z = to_complex(zeta);
    const Complex zi = z + kI;
    const Complex w = (z - kI) / zi;
    const Complex fprime = HolomorphicPair::eval_poly_derivative(p.g, w) * (2.0 * kI) / (zi * zi);
    return detail::assemble_monogenic(HolomorphicPair::eval_poly(p.g, w), fprime,
                                      HolomorphicPair::eval_poly(p.g0, w), zeta.y);
  };
}

/// Exact Fourier projection of a 2pi-periodic function known to be a trig
/// polynomial of degree <= max_degree.
inline CircleData project_circle(const std::function<double(double)>& fn, int max_degree) {
  const int m = 4 * (max_degree + 2);
  std::vector<double> samples(m);
  for (int j = 0; j < m; ++j) samples[j] = fn(2.0 * std::numbers::pi * j / m);
  CircleData out;
  out.cos_coef.assign(max_degree, 0.0);
  out.sin_coef.assign(max_degree, 0.0);
  double a0 = 0.0;
  for (int j = 0; j < m; ++j) a0 += samples[j];
  out.a0 = a0 / m;
  for (int n = 1; n <= max_degree; ++n) {
    double ca = 0.0, sa = 0.0;
    for (int j = 0; j < m; ++j) {
      const double th = 2.0 * std::numbers::pi * j * n / m;
      ca += samples[j] * std::cos(th);
      sa += samples[j] * std::sin(th);
    }
    out.cos_coef[n - 1] = 2.0 * ca / m;
    out.sin_coef[n - 1] = 2.0 * sa / m;
  }
  return out;
}

/// Default probe sets used by the homogeneous-family fits.
inline std::vector<BPoint> disk_probe_points() {
  std::vector<BPoint> pts;
  for (double r : {0.3, 0.55, 0.75})
    for (double th : {0.4, 1.9, 3.5, 5.2})
      pts.push_back({r * std::cos(th), r * std::sin(th)});
  return pts;
}

inline std::vector<BPoint> halfplane_probe_points() {
  return {{-2.0, 0.7}, {-1.2, 1.4}, {-0.4, 0.9}, {0.3, 2.1},
          {0.9, 0.6},  {1.6, 1.1},  {2.3, 1.8},  {0.0, 1.0}};
}

/// Result of fitting Phi_b - Phi_a to the homogeneous family
/// i(a zeta + a1 e1 + a2 e2); for the half-plane a is constrained to 0.
struct HomogeneousFit {
  double a = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double residual = 0.0;  // post-fit sup-norm over the probes
};

inline HomogeneousFit match_up_to_homogeneous(const FieldEval& phi_a, const FieldEval& phi_b,
                                              Domain domain,
                                              std::vector<BPoint> probes = {}) {
  if (probes.empty())
    probes = domain == Domain::disk ? disk_probe_points() : halfplane_probe_points();
  const std::size_t n = probes.size();
  std::vector<BNumber> delta(n);
  for (std::size_t j = 0; j < n; ++j) delta[j] = phi_b(probes[j]) - phi_a(probes[j]);

  // Only U2 and U4 carry the homogeneous family: i(a zeta + a1 e1 + a2 e2)
  // has components (0, a x + a1, 0, a y + a2).
  double sxx = 0.0, sx = 0.0, sy = 0.0, rhs_a = 0.0, rhs1 = 0.0, rhs2 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double x = probes[j].x, y = probes[j].y;
    const double p = delta[j].z1.imag(), q = delta[j].z2.imag();
    sxx += x * x + y * y;
    sx += x;
    sy += y;
    rhs_a += x * p + y * q;
    rhs1 += p;
    rhs2 += q;
  }
  HomogeneousFit fit;
  const double cnt = static_cast<double>(n);
  if (domain == Domain::disk) {
    const double denom = sxx - (sx * sx + sy * sy) / cnt;
    fit.a = denom > 0.0 ? (rhs_a - (sx * rhs1 + sy * rhs2) / cnt) / denom : 0.0;
  }
  fit.a1 = (rhs1 - fit.a * sx) / cnt;
  fit.a2 = (rhs2 - fit.a * sy) / cnt;

  for (std::size_t j = 0; j < n; ++j) {
    const BNumber model{{0.0, fit.a * probes[j].x + fit.a1}, {0.0, fit.a * probes[j].y + fit.a2}};
    fit.residual = std::max(fit.residual, norm(delta[j] - model));
  }
  return fit;
}

/// End-to-end round trip: generate a monogenic field, take its boundary
/// traces, solve the (1-3)-problem from them, and fit the difference to the
/// homogeneous family.
struct RoundtripReport {
  HomogeneousFit fit;
  double solvability = 0.0;  // trace contour integral (disk roundtrips)
};

inline RoundtripReport roundtrip_check(const HolomorphicPair& pair) {
  FieldEval truth = monogenic_from_holomorphic(pair);
  const int d = std::max(pair.degree(), 0);
  const CircleData u1 = project_circle(
      [&](double th) { return truth({std::cos(th), std::sin(th)}).z1.real(); }, d + 1);
  const CircleData u3 = project_circle(
      [&](double th) { return truth({std::cos(th), std::sin(th)}).z2.real(); }, d + 1);
  RoundtripReport rep;
  rep.solvability = solvability_integral(u1, u3);
  const DiskSolution sol = solve_13_disk(u1, u3);
  FieldEval solved = [sol](BPoint p) { return sol.eval(p); };
  rep.fit = match_up_to_homogeneous(solved, truth, Domain::disk);
  return rep;
}

inline RoundtripReport roundtrip_check(const CayleyPair& pair, int nodes = kDefaultLineNodes) {
  FieldEval truth = monogenic_from_cayley(pair);
  const int d = std::max(pair.degree(), 0);
  LineData u1{project_circle([&](double th) { return pair.trace_u1(th); }, d + 1)};
  LineData u3{project_circle([&](double th) { return pair.trace_u3(th); }, d + 1)};
  const HalfplaneSolution sol = solve_13_halfplane(u1, u3, 0.0, 0.0, nodes);
  RoundtripReport rep;
  FieldEval solved = [sol](BPoint p) { return sol.eval(p); };
  rep.fit = match_up_to_homogeneous(solved, truth, Domain::halfplane);
  return rep;
}

/// epsilon-excluded principal-value quadrature of the singular disk integral
/// S_{dD}[u] at boundary angle theta: the arc with chord ||tau - zeta|| < eps
/// is removed and the rest is integrated on panels graded toward the cut.
/// Checker-side oracle for the spectral assembly in singular_boundary_disk.
inline BNumber pv_excluded_singular_disk(const CircleData& u, double theta, double eps,
                                         int panel_nodes = 24) {
  const BPoint zb{std::cos(theta), std::sin(theta)};
  const BNumber z = embed(zb);
  const double delta = 2.0 * std::asin(0.5 * eps);

  auto kernel = [&](double dtheta) {
    const double th = theta + dtheta;
    const BPoint tp{std::cos(th), std::sin(th)};
    const BNumber tau = embed(tp);
    const BNumber dtau{{-tp.y, 0.0}, {tp.x, 0.0}};
    return u.eval(th) * ((tau + z) * inv(tau - z) * inv(tau) * dtau);
  };

  BNumber acc{};
  for (double sign : {1.0, -1.0}) {
    double lo = delta;
    while (lo < std::numbers::pi) {
      const double hi = std::min(2.0 * lo, std::numbers::pi);
      acc += gl_integrate([&](double d) { return kernel(sign * d); }, lo, hi, panel_nodes);
      lo = hi;
    }
  }
  return acc * (1.0 / (2.0 * std::numbers::pi * kI));
}

/// Two-point Richardson extrapolation of the excluded-PV oracle in
/// eps ∈ {1e-2, 1e-3} (the excision error is linear in eps).
inline BNumber singular_boundary_disk_extrapolated(const CircleData& u, double theta) {
  const double e1v = 1e-2, e2v = 1e-3;
  const BNumber p1 = pv_excluded_singular_disk(u, theta, e1v);
  const BNumber p2 = pv_excluded_singular_disk(u, theta, e2v);
  return (e1v * p2 - e2v * p1) * (1.0 / (e1v - e2v));
}

}  // namespace biharm
