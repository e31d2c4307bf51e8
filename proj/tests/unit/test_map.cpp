#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "gen.hpp"
#include "hypermap/map.hpp"

using namespace hypermap;
using hypermap::testing::Gen;

namespace {

constexpr double kPi = std::numbers::pi;

double mat_err(const Mat2& a, const Mat2& b) {
  const double scale = std::max({1.0, std::abs(b.a11), std::abs(b.a12), std::abs(b.a21), std::abs(b.a22)});
  return std::max({std::abs(a.a11 - b.a11), std::abs(a.a12 - b.a12), std::abs(a.a21 - b.a21),
                   std::abs(a.a22 - b.a22)}) /
         scale;
}

}  // namespace

TEST_CASE("MapParams rejects nonpositive and non-finite k") {
  CHECK_THROWS_AS(MapParams(0.0), ParameterError);
  CHECK_THROWS_AS(MapParams(-1.0), ParameterError);
  CHECK_THROWS_AS(MapParams(std::nan("")), ParameterError);
  CHECK_THROWS_AS(MapParams(std::numeric_limits<double>::infinity()), ParameterError);
  CHECK_NOTHROW(MapParams(1e-3));
}

TEST_CASE("closed-form validity flags") {
  // The tightest arccos argument is (1 + 3 sqrt 3) / (4 pi k).
  const double k_min = (1.0 + 3.0 * std::sqrt(3.0)) / (4.0 * kPi);
  CHECK(MapParams(k_min * 1.0001).all_defined());
  const MapParams low(k_min * 0.999);
  CHECK_FALSE(low.all_defined());
  CHECK_FALSE(low.defined(ClosedFormConstant::delta_hat_T_plus));
  CHECK(low.defined(ClosedFormConstant::delta_star));
  CHECK_FALSE(MapParams(0.05).defined(ClosedFormConstant::delta_star));
}

TEST_CASE("wrap_unit lands in [0, 1)") {
  CHECK(wrap_unit(0.0) == 0.0);
  CHECK(wrap_unit(1.0) == 0.0);
  CHECK(wrap_unit(-0.25) == doctest::Approx(0.75));
  CHECK(wrap_unit(3.5) == doctest::Approx(0.5));
  CHECK(wrap_unit(1.0 - 1e-16) == 0.0);
  CHECK(wrap_unit(-1e-300) < 1.0);
  Gen g(7);
  for (int i = 0; i < 1000; ++i) {
    const double w = wrap_unit(g.uniform(-1e6, 1e6));
    REQUIRE(w >= 0.0);
    REQUIRE(w < 1.0);
  }
}

TEST_CASE("map_forward fixed points and shears") {
  const TorusPoint a = map_forward({0.0, 0.0}, MapParams(1.0));
  CHECK(a.x() == 0.0);
  CHECK(a.y() == 0.0);
  const TorusPoint b = map_forward({0.0, 0.5}, MapParams(7.0));
  CHECK(torus_distance(b, {0.0, 0.5}) < 1e-14);
  const TorusPoint c = map_forward({0.25, 0.0}, MapParams(3.0));
  CHECK(c.x() == doctest::Approx(0.25));
  CHECK(c.y() == doctest::Approx(0.25));
}

TEST_CASE("map_inverse examples") {
  const TorusPoint a = map_inverse({0.0, 0.0}, MapParams(1.0));
  CHECK(torus_distance(a, {0.0, 0.0}) < 1e-15);
  const TorusPoint b = map_inverse({0.25, 0.25}, MapParams(3.0));
  CHECK(torus_distance(b, {0.25, 0.0}) < 1e-14);
}

TEST_CASE("property: forward and inverse are mutually inverse") {
  Gen g(11);
  for (int i = 0; i < 1000; ++i) {
    const MapParams params(i < 500 ? 5.0 : g.k());
    const TorusPoint p = g.point();
    // Rounding of x + k sin is amplified by 2 pi k in the inverse.
    const double tol = std::max(1e-12, 1e-15 * params.k() * params.k());
    INFO("k=" << params.k() << " p=(" << p.x() << "," << p.y() << ")");
    REQUIRE(torus_distance(map_inverse(map_forward(p, params), params), p) < tol);
    REQUIRE(torus_distance(map_forward(map_inverse(p, params), params), p) < tol);
  }
}

TEST_CASE("jacobian examples") {
  const Mat2 j = jacobian({0.7, 0.25}, MapParams(42.0), Time::forward);
  CHECK(std::abs(j.a11 - 1.0) < 1e-12);
  CHECK(std::abs(j.a12) < 1e-12);
  CHECK(std::abs(j.a21 - 1.0) < 1e-12);
  CHECK(std::abs(j.a22 - 1.0) < 1e-12);

  const Mat2 j0 = jacobian({0.3, 0.0}, MapParams(1.0), Time::forward);
  CHECK(j0.a11 == 1.0);
  CHECK(j0.a12 == doctest::Approx(2.0 * kPi).epsilon(1e-15));
  CHECK(j0.a21 == 1.0);
  CHECK(j0.a22 == doctest::Approx(1.0 + 2.0 * kPi).epsilon(1e-15));
}

TEST_CASE("property: backward jacobian inverts the forward jacobian at the preimage") {
  Gen g(13);
  for (int i = 0; i < 100; ++i) {
    const MapParams params(g.k());
    const TorusPoint p = g.point();
    const Mat2 back = jacobian(p, params, Time::backward);
    const Mat2 fwd_inv = jacobian(map_inverse(p, params), params, Time::forward).inverse();
    INFO("k=" << params.k());
    REQUIRE(mat_err(back, fwd_inv) < 1e-12);
  }
}

TEST_CASE("property: unimodular jacobians") {
  Gen g(17);
  for (int i = 0; i < 2000; ++i) {
    const MapParams params(g.k(0.6, 1000.0));
    const TorusPoint p = g.point();
    REQUIRE(std::abs(jacobian(p, params, Time::forward).det() - 1.0) < 1e-12);
    REQUIRE(std::abs(jacobian(p, params, Time::backward).det() - 1.0) < 1e-12);
  }
}

TEST_CASE("property: locality of the jacobians") {
  Gen g(19);
  const MapParams params(3.7);
  const double y = 0.123;
  const Mat2 ref = jacobian({0.0, y}, params, Time::forward);
  const double yt = 0.456;
  const Mat2 ref_b = jacobian({0.0, yt}, params, Time::backward);
  for (int i = 0; i < 100; ++i) {
    const double x = g.uniform(0.0, 1.0);
    const Mat2 j = jacobian({x, y}, params, Time::forward);
    REQUIRE(j.a11 == ref.a11);
    REQUIRE(j.a12 == ref.a12);
    REQUIRE(j.a21 == ref.a21);
    REQUIRE(j.a22 == ref.a22);
    const TorusPoint q(x, x + yt);
    const Mat2 jb = jacobian(q, params, Time::backward);
    REQUIRE(mat_err(jb, ref_b) < 1e-12);
  }
}

TEST_CASE("orbit_jacobian single factors and the fixed point square") {
  const MapParams params(1.0);
  const TorusPoint p(0.31, 0.77);
  CHECK(mat_err(orbit_jacobian(p, params, 1), jacobian(p, params, Time::forward)) == 0.0);
  CHECK(mat_err(orbit_jacobian(p, params, -1), jacobian(p, params, Time::backward)) == 0.0);

  const double t = 2.0 * kPi;
  const Mat2 expected{1.0 + t, t + t * (1.0 + t), 1.0 + (1.0 + t), t + (1.0 + t) * (1.0 + t)};
  CHECK(mat_err(orbit_jacobian({0.0, 0.0}, params, 2), expected) < 1e-14);
}

TEST_CASE("orbit_jacobian errors") {
  const MapParams params(2.0);
  CHECK_THROWS_AS(orbit_jacobian({0.1, 0.2}, params, 0), std::invalid_argument);
  CHECK_THROWS_AS(orbit_jacobian({0.1, 0.2}, params, 61), IterateDepthError);
  CHECK_THROWS_AS(orbit_jacobian({0.1, 0.2}, params, -61), IterateDepthError);
  try {
    orbit_jacobian({0.1, 0.2}, params, 9, 8);
    FAIL("expected IterateDepthError");
  } catch (const IterateDepthError& e) {
    CHECK(e.requested() == 9);
    CHECK(e.cap() == 8);
  }
  CHECK_NOTHROW(orbit_jacobian({0.1, 0.2}, params, 60));
}

TEST_CASE("property: chain consistency and determinant drift") {
  Gen g(23);
  for (int trial = 0; trial < 50; ++trial) {
    const MapParams params(g.k(0.6, 20.0));
    const TorusPoint p = g.point();
    TorusPoint z = p;
    for (int n = 1; n < 12; ++n) {
      const Mat2 lhs = orbit_jacobian(p, params, n + 1);
      z = map_forward(z, params);
      const Mat2 rhs = jacobian(z, params, Time::forward) * orbit_jacobian(p, params, n);
      INFO("k=" << params.k() << " n=" << n);
      REQUIRE(mat_err(lhs, rhs) < 1e-9);
    }
    for (int n : {-1, -3, -5}) {
      const Mat2 m = orbit_jacobian(p, params, n);
      const double scale = std::max({1.0, std::abs(m.a11 * m.a22), std::abs(m.a12 * m.a21)});
      REQUIRE(std::abs(m.det() - 1.0) / scale < 1e-9 * std::abs(n));
    }
  }
}
