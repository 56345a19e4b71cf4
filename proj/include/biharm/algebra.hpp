#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "biharm/errors.hpp"

namespace biharm {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Relative threshold below which the canonical coordinate alpha is treated
/// as zero, i.e. the element is flagged as a zero divisor.
inline constexpr double kZeroDivisorEps = 1e-12;

namespace detail {

/// Structure constants of the product: e2*e2 = e22_e1*e1 + e22_e2*e2.
/// The defaults encode the biharmonic table e2^2 = e1 + 2i*e2.  Overriding
/// them exists solely as a negative-control hook for the self test.
struct MulTable {
  Complex e22_e1{1.0, 0.0};
  Complex e22_e2{0.0, 2.0};
};

}  // namespace detail

/// Element of the biharmonic algebra B, stored as the two complex
/// coordinates with respect to the basis {e1, e2} (e1 = 1 is the unit).
///
/// The second basis vector satisfies e2^2 = e1 + 2i*e2, which makes
/// (e1^2 + e2^2)^2 = 0 while e1^2 + e2^2 != 0.  The nilpotent
/// rho = e1^2 + e2^2 = 2e1 + 2i*e2 spans the radical; {1, rho} is the
/// canonical basis used internally for inversion.
struct BNumber {
  Complex z1{0.0, 0.0};  ///< coefficient of e1
  Complex z2{0.0, 0.0};  ///< coefficient of e2

  BNumber& operator+=(const BNumber& o) {
    z1 += o.z1;
    z2 += o.z2;
    return *this;
  }
  BNumber& operator-=(const BNumber& o) {
    z1 -= o.z1;
    z2 -= o.z2;
    return *this;
  }
  BNumber& operator*=(Complex c) {
    z1 *= c;
    z2 *= c;
    return *this;
  }
};

/// Point zeta = x*e1 + y*e2 of the biharmonic plane.  Nonzero points are
/// never zero divisors (their canonical alpha is x + iy != 0).
struct BPoint {
  double x = 0.0;
  double y = 0.0;
};

inline BNumber e1() { return {{1.0, 0.0}, {0.0, 0.0}}; }
inline BNumber e2() { return {{0.0, 0.0}, {1.0, 0.0}}; }
/// The radical element rho = 2e1 + 2i*e2, rho^2 = 0.
inline BNumber rho() { return {{2.0, 0.0}, {0.0, 2.0}}; }

inline BNumber embed(BPoint p) { return {{p.x, 0.0}, {p.y, 0.0}}; }
inline Complex to_complex(BPoint p) { return {p.x, p.y}; }
inline double norm(BPoint p) { return std::hypot(p.x, p.y); }

inline BNumber operator+(BNumber a, const BNumber& b) { return a += b; }
inline BNumber operator-(BNumber a, const BNumber& b) { return a -= b; }
inline BNumber operator-(const BNumber& a) { return {-a.z1, -a.z2}; }
inline BNumber operator*(BNumber a, Complex c) { return a *= c; }
inline BNumber operator*(Complex c, BNumber a) { return a *= c; }
inline BNumber operator*(BNumber a, double c) { return a *= Complex{c, 0.0}; }
inline BNumber operator*(double c, BNumber a) { return a *= Complex{c, 0.0}; }

namespace detail {

/// Bilinear extension of the multiplication table over C.
inline BNumber mul(const BNumber& a, const BNumber& b, const MulTable& t = {}) {
  const Complex cross = a.z2 * b.z2;
  return {a.z1 * b.z1 + t.e22_e1 * cross, a.z1 * b.z2 + a.z2 * b.z1 + t.e22_e2 * cross};
}

}  // namespace detail

/// Commutative, associative product from the table e1^2 = e1, e1e2 = e2,
/// e2^2 = e1 + 2i*e2.
inline BNumber operator*(const BNumber& a, const BNumber& b) { return detail::mul(a, b); }

/// Euclidean norm sqrt(|z1|^2 + |z2|^2).
inline double norm(const BNumber& a) { return std::sqrt(std::norm(a.z1) + std::norm(a.z2)); }

/// Coordinates (alpha, beta) with respect to the canonical basis {1, rho}:
/// a = alpha*1 + beta*rho.
struct Canonical {
  Complex alpha;
  Complex beta;
};

inline Canonical to_canonical(const BNumber& a) {
  return {a.z1 + kI * a.z2, -0.5 * kI * a.z2};
}

inline BNumber from_canonical(Complex alpha, Complex beta) {
  return {alpha + 2.0 * beta, 2.0 * kI * beta};
}

inline BNumber from_canonical(const Canonical& c) { return from_canonical(c.alpha, c.beta); }

/// True iff a is a nonzero multiple of rho (canonical alpha vanishes).
/// Zero itself is not a zero divisor by convention.
inline bool is_zero_divisor(const BNumber& a) {
  const double n = norm(a);
  if (n == 0.0) return false;
  return std::abs(to_canonical(a).alpha) <= kZeroDivisorEps * n;
}

/// Inverse via the canonical basis: (alpha + beta*rho)^{-1} = alpha^{-1} - beta*alpha^{-2}*rho.
/// Throws ZeroDivisorError for zero divisors and for zero.
inline BNumber inv(const BNumber& a) {
  const Canonical c = to_canonical(a);
  if (std::abs(c.alpha) <= kZeroDivisorEps * norm(a) || norm(a) == 0.0)
    throw ZeroDivisorError("inv: zero divisor (canonical alpha vanishes)");
  const Complex ia = 1.0 / c.alpha;
  return from_canonical(ia, -c.beta * ia * ia);
}

inline BNumber operator/(const BNumber& a, const BNumber& b) { return a * inv(b); }

/// Real components of the expansion a = U1*e1 + U2*i*e1 + U3*e2 + U4*i*e2.
inline std::array<double, 4> components(const BNumber& a) {
  return {a.z1.real(), a.z1.imag(), a.z2.real(), a.z2.imag()};
}

inline BNumber from_components(const std::array<double, 4>& u) {
  return {{u[0], u[1]}, {u[2], u[3]}};
}

}  // namespace biharm
