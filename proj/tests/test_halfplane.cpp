#include <doctest.h>

#include <cmath>
#include <numbers>

#include "biharm/halfplane.hpp"
#include "biharm/verify.hpp"
#include "oracle_helpers.hpp"

using namespace biharm;

TEST_CASE("biharmonic Schwartz integral for the half-plane") {
  SUBCASE("constant data gives e1 everywhere") {
    const LineData one{CircleData{1.0, {}, {}}};
    for (BPoint p : {BPoint{0.0, 0.5}, BPoint{-2.0, 1.5}, BPoint{3.0, 0.02}})
      CHECK(norm(biharmonic_schwartz_halfplane(one, p) - e1()) <= 1e-12);
  }
  SUBCASE("lorentzian at zeta = e2: (3/4) e1 + (i/4) e2") {
    const BNumber v = biharmonic_schwartz_halfplane(oracle::lorentzian_line(), {0.0, 1.0});
    const BNumber expect{{0.75, 0.0}, {0.0, 0.25}};
    CHECK(norm(v - expect) <= 1e-12);
  }
  SUBCASE("direct-definition quadrature agrees with the assembly") {
    auto rng = oracle::make_rng(41);
    for (int rep = 0; rep < 6; ++rep) {
      const LineData u = oracle::random_line(rng, 5, 1.0);
      const BPoint p{oracle::uniform(rng, -3, 3), oracle::uniform(rng, 0.3, 3.0)};
      CHECK(norm(biharmonic_schwartz_halfplane(u, p) - oracle::halfplane_direct_quad(u, p)) <=
            1e-9);
    }
  }
  SUBCASE("domain guard") {
    CHECK_THROWS_AS(biharmonic_schwartz_halfplane(oracle::lorentzian_line(), {0.0, 0.0}),
                    DomainError);
  }
}

TEST_CASE("boundary values on the real axis") {
  SUBCASE("constants") {
    const LineData c{CircleData{-1.25, {}, {}}};
    for (double xi : {-3.0, 0.0, 2.0})
      CHECK(norm(boundary_value_halfplane(c, xi) - (-1.25) * e1()) <= 1e-12);
  }
  SUBCASE("lorentzian at xi = 1: ((1+i)/2) e1") {
    const BNumber v = boundary_value_halfplane(oracle::lorentzian_line(), 1.0);
    CHECK(norm(v - BNumber{{0.5, 0.5}, {0.0, 0.0}}) <= 1e-12);
  }
  SUBCASE("interior values approach the boundary values") {
    auto rng = oracle::make_rng(42);
    const LineData u = oracle::random_line(rng, 4, 0.8);
    for (double xi : {-1.1, 0.6}) {
      const BNumber lim = boundary_value_halfplane(u, xi);
      double prev = 1e9;
      for (double y : {1e-2, 1e-3, 1e-4}) {
        const double err = norm(biharmonic_schwartz_halfplane(u, {xi, y}) - lim);
        CHECK(err < prev);
        prev = err;
      }
    }
  }
}

TEST_CASE("limit at infinity") {
  SUBCASE("constants") {
    const LineData c{CircleData{0.75, {}, {}}};
    CHECK(norm(limit_at_infinity(c) - 0.75 * e1()) <= 1e-12);
  }
  SUBCASE("lorentzian limit is zero") {
    CHECK(norm(limit_at_infinity(oracle::lorentzian_line())) <= 1e-12);
  }
  SUBCASE("large-radius evaluation approaches the limit") {
    auto rng = oracle::make_rng(43);
    const LineData u = oracle::random_line(rng, 4, 0.8);
    const BNumber lim = limit_at_infinity(u);
    double prev = 1e9;
    for (double R : {1e3, 1e4}) {
      const double err =
          norm(biharmonic_schwartz_halfplane(u, {0.6 * R, 0.8 * R}) - lim);
      CHECK(err < prev);
      prev = err;
    }
    CHECK(prev <= 1e-3);
  }
}

TEST_CASE("solve_13_halfplane") {
  const LineData zero{};

  SUBCASE("zero data, zero constants: the zero field") {
    const HalfplaneSolution s = solve_13_halfplane(zero, zero);
    CHECK(norm(s.eval({0.3, 0.9})) <= 1e-15);
  }
  SUBCASE("homogeneous family a1 i e1 + a2 i e2 with vanishing U1, U3") {
    const HalfplaneSolution s = solve_13_halfplane(zero, zero, 0.8, -1.3);
    for (BPoint p : {BPoint{0.0, 0.4}, BPoint{-2.0, 2.0}}) {
      const BNumber v = s.eval(p);
      CHECK(norm(v - BNumber{{0.0, 0.8}, {0.0, -1.3}}) <= 1e-15);
      const auto u = components(v);
      CHECK(u[0] == 0.0);
      CHECK(u[2] == 0.0);
    }
  }
  SUBCASE("particular solution example") {
    const HalfplaneSolution s = solve_13_halfplane(oracle::lorentzian_line(), zero);
    CHECK(norm(s.eval({0.0, 1.0}) - BNumber{{0.75, 0.0}, {0.0, 0.25}}) <= 1e-12);
  }
  SUBCASE("homogeneous invariance") {
    auto rng = oracle::make_rng(44);
    const LineData u1 = oracle::random_line(rng, 4, 0.8);
    const LineData u3 = oracle::random_line(rng, 4, 0.8);
    const HalfplaneSolution sa = solve_13_halfplane(u1, u3, 0.9, -0.4);
    const HalfplaneSolution s0 = solve_13_halfplane(u1, u3, 0.0, 0.0);
    for (BPoint p : {BPoint{0.7, 0.6}, BPoint{-1.4, 2.2}}) {
      const BNumber diff = sa.eval(p) - s0.eval(p);
      CHECK(norm(diff - BNumber{{0.0, 0.9}, {0.0, -0.4}}) <= 1e-14);
    }
  }
  SUBCASE("boundary recovery, decreasing in y") {
    auto rng = oracle::make_rng(45);
    for (int rep = 0; rep < 2; ++rep) {
      const LineData u1 = oracle::random_line(rng, 4, 0.7);
      const LineData u3 = oracle::random_line(rng, 4, 0.7);
      const HalfplaneSolution s = solve_13_halfplane(u1, u3, 0.3, 0.1);
      double prev = 1e9;
      for (double y : {1e-2, 1e-3, 1e-4}) {
        double worst = 0.0;
        for (int j = 0; j < 16; ++j) {
          const double xi = -5.0 + 10.0 * j / 15.0;
          const auto u = components(s.eval({xi, y}));
          worst = std::max(worst, std::abs(u[0] - u1.eval(xi)));
          worst = std::max(worst, std::abs(u[2] - u3.eval(xi)));
        }
        CHECK(worst < prev);
        prev = worst;
      }
      CHECK(prev <= 1e-3);
    }
  }
  SUBCASE("monogenicity: CR residual at random interior points") {
    auto rng = oracle::make_rng(46);
    const LineData u1 = oracle::random_line(rng, 4, 0.8);
    const LineData u3 = oracle::random_line(rng, 4, 0.8);
    const HalfplaneSolution s = solve_13_halfplane(u1, u3, 0.2, 0.5);
    const FieldEval f = [&](BPoint p) { return s.eval(p); };
    for (int k = 0; k < 8; ++k) {
      const BPoint p{oracle::uniform(rng, -2.5, 2.5), oracle::uniform(rng, 0.4, 2.5)};
      const FieldProbe probe{f, Domain::halfplane, 1e-4 * (1.0 + norm(p))};
      CHECK(cr_residual(probe, p) <= 1e-6);
    }
  }
  SUBCASE("biharmonicity: 13-point stencil on all four components") {
    // Probes sit well above the axis: the correction term's derivatives grow
    // like y^-5 toward the boundary and would swamp the h^2 stencil there.
    auto rng = oracle::make_rng(47);
    const LineData u1 = oracle::random_line(rng, 4, 0.6);
    const LineData u3 = oracle::random_line(rng, 4, 0.6);
    const HalfplaneSolution s = solve_13_halfplane(u1, u3);
    for (int k = 0; k < 4; ++k) {
      const BPoint p{oracle::uniform(rng, -2.0, 2.0), oracle::uniform(rng, 1.8, 3.0)};
      for (int comp = 0; comp < 4; ++comp) {
        auto U = [&](double x, double y) { return components(s.eval({x, y}))[comp]; };
        const double res = std::abs(biharmonic_residual(U, p.x, p.y, 1e-2));
        CHECK(res <= 1e-4 * biharmonic_scale(U, p.x, p.y, 1e-2));
      }
    }
  }
  SUBCASE("boundary residual diagnostic") {
    auto rng = oracle::make_rng(48);
    const HalfplaneSolution s =
        solve_13_halfplane(oracle::random_line(rng, 4, 0.6), oracle::random_line(rng, 4, 0.6));
    CHECK(s.boundary_residual() <= 1e-3);
  }
  SUBCASE("near-axis evaluation switches to the boundary path") {
    const HalfplaneSolution s = solve_13_halfplane(oracle::lorentzian_line(), zero, 0.1, 0.0);
    const BNumber direct = s.boundary_value(0.8);
    CHECK(norm(s.eval({0.8, 1e-9}) - direct) == 0.0);
    CHECK_THROWS_AS(s.eval({0.0, -0.1}), DomainError);
  }
}
