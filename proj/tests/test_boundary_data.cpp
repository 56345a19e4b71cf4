#include <doctest.h>

#include <numbers>

#include "biharm/boundary_data.hpp"
#include "oracle_helpers.hpp"

using namespace biharm;

TEST_CASE("CircleData evaluation") {
  CHECK(CircleData{1.0, {}, {}}.eval(2.37) == 1.0);
  CHECK(CircleData{0.0, {1.0}, {}}.eval(0.0) == doctest::Approx(1.0));
  // sin 2*theta at pi/4
  CHECK(CircleData{0.0, {}, {0.0, 1.0}}.eval(std::numbers::pi / 4) == doctest::Approx(1.0));
}

TEST_CASE("CircleData derivative matches finite differences") {
  auto rng = oracle::make_rng(21);
  const CircleData u = oracle::random_circle(rng, 6, 1.0);
  const double h = 1e-6;
  for (double th : {0.0, 0.7, 2.9, 4.4}) {
    const double fd = (u.eval(th + h) - u.eval(th - h)) / (2 * h);
    CHECK(u.derivative(th) == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("LineData pullback semantics") {
  auto rng = oracle::make_rng(22);
  const LineData u = oracle::random_line(rng, 5, 1.0);

  SUBCASE("limit at infinity from both sides") {
    CHECK(u.pullback.eval(std::numbers::pi) ==
          doctest::Approx(u.pullback.eval(-std::numbers::pi)).epsilon(1e-14));
    CHECK(u.eval(1e9) == doctest::Approx(u.at_infinity()).epsilon(1e-7));
    CHECK(u.eval(-1e9) == doctest::Approx(u.at_infinity()).epsilon(1e-7));
  }

  SUBCASE("angle evaluation agrees with direct evaluation") {
    for (double t : {-3.0, -0.4, 0.0, 1.7, 25.0})
      CHECK(u.eval(t) == doctest::Approx(u.eval_angle(2.0 * std::atan(t))).epsilon(1e-15));
  }

  SUBCASE("derivative matches finite differences") {
    const double h = 1e-6;
    for (double t : {-2.0, 0.3, 1.9}) {
      const double fd = (u.eval(t + h) - u.eval(t - h)) / (2 * h);
      CHECK(u.derivative(t) == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("lorentzian datum is exact in the line class") {
  const LineData u = oracle::lorentzian_line();
  for (double t : {-10.0, -1.0, 0.0, 0.5, 3.0, 100.0})
    CHECK(u.eval(t) == doctest::Approx(1.0 / (1.0 + t * t)).epsilon(1e-14));
  CHECK(u.at_infinity() == doctest::Approx(0.0));
}
