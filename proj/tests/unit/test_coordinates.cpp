#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gen.hpp"
#include "hypermap/coordinates.hpp"
#include "hypermap/oracle.hpp"

using namespace hypermap;
using hypermap::testing::Gen;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

double dstar(double k) { return std::acos(-1.0 / (4.0 * kPi * k)) / (2.0 * kPi); }

}  // namespace

TEST_CASE("psi examples") {
  CHECK(psi(0.0, MapParams(1.0)) == doctest::Approx(2.0 * kPi).epsilon(1e-15));
  CHECK(std::abs(psi(0.25, MapParams(17.0))) < 1e-13);
  CHECK(psi(0.25, MapParams(2.0), PsiKind::sin) == doctest::Approx(4.0 * kPi));
  CHECK(psi(0.3, MapParams(2.0), PsiKind::cos, Frame::diagonal) == psi(0.3, MapParams(2.0)));
}

TEST_CASE("phi examples") {
  for (double k : {1.0, 2.0, 10.0, 100.0}) {
    const MapParams params(k);
    const CriticalConstants c = critical_constants(params);
    INFO("k=" << k);
    CHECK(std::abs(phi(*c.delta_star, params).value()) < 1e-12);
    // psi_c(0) = 2 pi k gives P1 = 8 pi^2 k^2 + 4 pi k - 1.
    const double expected = -(8.0 * kPi * k + 2.0) / (8.0 * kPi * kPi * k * k + 4.0 * kPi * k - 1.0);
    CHECK(phi(0.0, params).value() == doctest::Approx(expected).epsilon(1e-14));
    // The printed form with 2 pi k in the denominator agrees to O(1/k).
    const double printed = -(8.0 * kPi * k + 2.0) / (8.0 * kPi * kPi * k * k + 2.0 * kPi * k - 1.0);
    CHECK(std::abs(phi(0.0, params).value() / printed - 1.0) < 1.0 / (2.0 * kPi * k));
    const double half = (8.0 * kPi * k - 2.0) / (8.0 * kPi * kPi * k * k - 4.0 * kPi * k - 1.0);
    CHECK(phi(0.5, params).value() == doctest::Approx(half).epsilon(1e-14));
    CHECK(phi(*c.delta_minus, params).infinite);
    CHECK(phi(*c.delta_plus, params).infinite);
    CHECK(phi(1.0 - *c.delta_minus, params).infinite);
    CHECK(phi(1.0 - *c.delta_plus, params).infinite);
    CHECK_FALSE(phi(0.1, params).infinite);
  }
  const MapParams params(2.0);
  const double dm = *critical_constants(params).delta_minus;
  // Signed infinity on each side of the asymptote follows num/den.
  const ExtendedReal at = phi(dm, params);
  CHECK(std::isinf(at.value()));
  CHECK(phi(dm - 1e-6, params).value() * phi(dm + 1e-6, params).value() < 0.0);
}

TEST_CASE("phi_tilde examples") {
  for (double k : {1.0, 5.0, 50.0}) {
    const MapParams params(k);
    const CriticalConstants c = critical_constants(params);
    INFO("k=" << k);
    // psi~ = (-1 -+ sqrt 3) / 2 gives P2 = 3/2 and P2' = -+ sqrt 3, so
    // phi~ = -+ sqrt 3 (not -+ sqrt 3 / 2, which drops the factor 2).
    CHECK(phi_tilde(*c.delta_minus, params).value() == doctest::Approx(-kSqrt3).epsilon(1e-12));
    CHECK(phi_tilde(1.0 - *c.delta_minus, params).value() == doctest::Approx(-kSqrt3).epsilon(1e-12));
    CHECK(phi_tilde(*c.delta_plus, params).value() == doctest::Approx(kSqrt3).epsilon(1e-12));
    CHECK(phi_tilde(1.0 - *c.delta_plus, params).value() == doctest::Approx(kSqrt3).epsilon(1e-12));
    CHECK(phi_tilde(*c.delta_star, params).infinite);
    CHECK(phi_tilde(1.0 - *c.delta_star, params).infinite);
    // phi~(0) ~ -2 pi k and phi~(1/2) ~ +2 pi k for large k.
    if (k >= 50.0) {
      CHECK(phi_tilde(0.0, params).value() / (2.0 * kPi * k) == doctest::Approx(-1.0).epsilon(0.01));
      CHECK(phi_tilde(0.5, params).value() / (2.0 * kPi * k) == doctest::Approx(1.0).epsilon(0.01));
    }
  }
  Gen g(31);
  const MapParams params(3.0);
  for (int i = 0; i < 1000; ++i) REQUIRE(phi_tilde(g.uniform(0.0, 1.0), params).value() != 0.0);
}

TEST_CASE("theta_field examples") {
  for (double k : {1.0, 3.0, 30.0}) {
    const MapParams params(k);
    const CriticalConstants c = critical_constants(params);
    INFO("k=" << k);
    CHECK(theta_field(*c.delta_star, params, Time::forward).canonical ==
          doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(theta_field(*c.delta_minus, params, Time::forward).canonical ==
          doctest::Approx(3 * kPi / 4).epsilon(1e-12));
    const double back = theta_field(*c.delta_minus, params, Time::backward).canonical;
    CHECK(back == doctest::Approx(kPi / 2 + 0.5 * std::atan(-kSqrt3)).epsilon(1e-12));
    CHECK(back == doctest::Approx(kPi / 3).epsilon(1e-12));
    CHECK(theta_field(*c.delta_plus, params, Time::backward).canonical ==
          doctest::Approx(kPi / 6).epsilon(1e-12));
    CHECK(theta_field(*c.delta_star, params, Time::backward).canonical ==
          doctest::Approx(kPi / 4).epsilon(1e-12));
  }
}

TEST_CASE("theta_field ranges and lifting") {
  Gen g(37);
  for (int i = 0; i < 2000; ++i) {
    const MapParams params(g.k());
    const double y = g.uniform(0.0, 1.0);
    const DirAngle f = theta_field(y, params, Time::forward);
    const DirAngle b = theta_field(y, params, Time::backward);
    REQUIRE(f.canonical > 0.0);
    REQUIRE(f.canonical < kPi);
    REQUIRE(b.canonical > 0.0);
    REQUIRE(b.canonical < kPi / 2);
    REQUIRE(std::abs(std::remainder(f.lifted - f.canonical, kPi)) < 1e-15);
  }
}

TEST_CASE("property: oracle equivalence of the contracting fields") {
  for (double k : {1.0, 2.0, 5.0, 10.0, 100.0}) {
    const MapParams params(k);
    Gen g(static_cast<std::uint64_t>(k * 1000));
    for (int i = 0; i < 4096; ++i) {
      const double y = g.uniform(0.0, 1.0);
      const double x = g.uniform(0.0, 1.0);
      const TorusPoint pf(x, y);
      const TorusPoint pb(x, x + y);
      const auto sf = oracle::svd2(jacobian(pf, params, Time::forward));
      const auto sb = oracle::svd2(jacobian(pb, params, Time::backward));
      INFO("k=" << k << " coord=" << y);
      REQUIRE(angle_distance_mod_pi(theta_field(y, params, Time::forward).canonical,
                                    sf.dir_min.canonical) < 1e-9);
      REQUIRE(angle_distance_mod_pi(theta_field(pb.ytilde(), params, Time::backward).canonical,
                                    sb.dir_min.canonical) < 1e-9);
    }
  }
}

TEST_CASE("property: e^(-1) matches a fine angle sweep") {
  Gen g(41);
  for (int i = 0; i < 100; ++i) {
    const MapParams params(g.k());
    const double yt = g.uniform(0.0, 1.0);
    const Mat2 m = jacobian({0.0, yt}, params, Time::backward);
    const oracle::SweepResult w = oracle::sweep_min_direction(m, 100000);
    REQUIRE_FALSE(w.degenerate);
    const Vec2 e = unit_vector(DirectionField::e_minus1, yt, params);
    REQUIRE(angle_distance_mod_pi(std::atan2(e.y, e.x), w.dir_min.canonical) < 1e-6);
  }
}

TEST_CASE("property: tan 2 theta equals phi") {
  Gen g(43);
  int checked = 0;
  for (int i = 0; i < 4000; ++i) {
    const MapParams params(g.k());
    const double y = g.uniform(0.0, 1.0);
    const ExtendedReal f = phi(y, params);
    const double v = f.value();
    if (f.infinite || std::abs(v) > 1e6) continue;
    const double t = std::tan(2.0 * theta_field(y, params, Time::forward).canonical);
    REQUIRE(std::abs(t - v) <= 1e-9 * std::max(1.0, std::abs(v)));
    const ExtendedReal ft = phi_tilde(y, params);
    if (!ft.infinite && std::abs(ft.value()) < 1e6) {
      const double tb = std::tan(2.0 * theta_field(y, params, Time::backward).canonical);
      REQUIRE(std::abs(tb - ft.value()) <= 1e-9 * std::max(1.0, std::abs(ft.value())));
    }
    ++checked;
  }
  CHECK(checked > 3900);
}

TEST_CASE("property: fields are symmetric about y = 1/2") {
  Gen g(47);
  for (double k : {1.0, 7.0, 100.0}) {
    const MapParams params(k);
    for (int i = 0; i < 4096; ++i) {
      const double y = g.uniform(0.0, 1.0);
      for (Time t : {Time::forward, Time::backward}) {
        REQUIRE(std::abs(theta_field(y, params, t).canonical -
                         theta_field(1.0 - y, params, t).canonical) < 1e-12);
      }
    }
  }
}

TEST_CASE("property: derivative identities") {
  Gen g(53);
  for (double k : {1.0, 10.0, 100.0}) {
    const MapParams params(k);
    const CriticalConstants c = critical_constants(params);
    const double asym[] = {*c.delta_minus, *c.delta_plus, 1.0 - *c.delta_plus, 1.0 - *c.delta_minus};
    const double asym_t[] = {*c.delta_star, 1.0 - *c.delta_star};
    int n = 0;
    while (n < 1000) {
      const double y = g.uniform(0.0, 1.0);
      bool skip = std::abs(y) < 1e-4 || std::abs(y - 0.5) < 1e-4 || std::abs(y - 1.0) < 1e-4;
      for (double a : asym) skip = skip || std::abs(y - a) < 1e-3;
      for (double a : asym_t) skip = skip || std::abs(y - a) < 1e-3;
      if (skip) continue;
      const double fd = oracle::fd_derivative([&](double s) { return phi(s, params).value(); }, y, 1e-6);
      const double fdt =
          oracle::fd_derivative([&](double s) { return phi_tilde(s, params).value(); }, y, 1e-6);
      INFO("k=" << k << " y=" << y);
      REQUIRE(std::abs(fd - phi_prime(y, params)) <= 1e-5 * std::abs(phi_prime(y, params)));
      REQUIRE(std::abs(fdt - phi_tilde_prime(y, params)) <= 1e-5 * std::abs(phi_tilde_prime(y, params)));
      ++n;
    }
  }
}

TEST_CASE("property: backward field is the image of the forward expanding field") {
  Gen g(59);
  for (int i = 0; i < 1000; ++i) {
    const MapParams params(g.k());
    const TorusPoint z = g.point();
    const TorusPoint pre = map_inverse(z, params);
    const Vec2 f = unit_vector(DirectionField::f1, pre.y(), params);
    const Vec2 img = jacobian(pre, params, Time::forward).apply(f);
    const Vec2 e = unit_vector(DirectionField::e_minus1, z.ytilde(), params);
    REQUIRE(angle_distance_mod_pi(std::atan2(img.y, img.x), std::atan2(e.y, e.x)) < 1e-8);
  }
}

TEST_CASE("monotone rotation of e^(1)") {
  for (double k : {1.0, 2.0, 5.0, 10.0, 100.0}) {
    const MapParams params(k);
    const int n = 4096;
    INFO("k=" << k);
    for (int i = 1; i + 1 < n / 2; ++i) {
      REQUIRE(theta_field((i + 1.0) / n, params, Time::forward).canonical <
              theta_field(static_cast<double>(i) / n, params, Time::forward).canonical);
    }
    for (int i = n / 2 + 1; i + 1 < n; ++i) {
      REQUIRE(theta_field((i + 1.0) / n, params, Time::forward).canonical >
              theta_field(static_cast<double>(i) / n, params, Time::forward).canonical);
    }
  }
}

TEST_CASE("unit vectors") {
  const MapParams params(5.0);
  const Vec2 f = unit_vector(DirectionField::f1, dstar(5.0), params);
  CHECK(std::abs(std::abs(f.x) - 1.0) < 1e-12);
  CHECK(std::abs(f.y) < 1e-12);
  Gen g(61);
  for (int i = 0; i < 1000; ++i) {
    const double y = g.uniform(0.0, 1.0);
    const Vec2 e1 = unit_vector(DirectionField::e1, y, params);
    const Vec2 f1 = unit_vector(DirectionField::f1, y, params);
    const Vec2 em = unit_vector(DirectionField::e_minus1, y, params);
    const Vec2 fm = unit_vector(DirectionField::f_minus1, y, params);
    REQUIRE(std::abs(dot(e1, f1)) < 1e-15);
    REQUIRE(std::abs(dot(em, fm)) < 1e-15);
    REQUIRE(std::abs(norm(e1) - 1.0) < 1e-15);
  }
}

TEST_CASE("hyperbolic_frame examples") {
  const MapParams params(3.0);
  const HypFrame h = hyperbolic_frame({0.4, 0.25}, params, 1);
  const double golden = 0.5 * (1.0 + std::sqrt(5.0));
  CHECK(h.F == doctest::Approx(golden).epsilon(1e-14));
  CHECK(h.E == doctest::Approx(1.0 / golden).epsilon(1e-14));
  CHECK(h.H == doctest::Approx(1.0 / (golden * golden)).epsilon(1e-14));
  CHECK(h.order == 1);
  const HypFrame h0 = hyperbolic_frame({0.0, 0.0}, MapParams(1.0), 1);
  CHECK(h0.F >= std::sqrt(2.0));
  CHECK_THROWS_AS(hyperbolic_frame({0.1, 0.1}, params, 0), std::invalid_argument);
  CHECK_THROWS_AS(hyperbolic_frame({0.1, 0.1}, params, 70), IterateDepthError);
}

TEST_CASE("property: hyperbolic frames of order one") {
  Gen g(67);
  for (int i = 0; i < 4096; ++i) {
    const MapParams params(g.k());
    const TorusPoint p = g.point();
    for (int n : {1, -1}) {
      const HypFrame h = hyperbolic_frame(p, params, n);
      const Mat2 m = jacobian(p, params, n > 0 ? Time::forward : Time::backward);
      const double e_svd = oracle::svd2(m).sigma_min;
      REQUIRE(std::abs(e_svd * h.F - 1.0) < 1e-10);
      REQUIRE(h.H > 0.0);
      REQUIRE(h.H < 1.0);
      REQUIRE(std::abs(angle_distance_mod_pi(h.e_dir.canonical, h.f_dir.canonical) - kPi / 2) <
              1e-14);
      const double coord = n > 0 ? p.y() : p.ytilde();
      const Time t = n > 0 ? Time::forward : Time::backward;
      REQUIRE(angle_distance_mod_pi(h.e_dir.canonical, theta_field(coord, params, t).canonical) <
              1e-9);
    }
  }
}

TEST_CASE("hyperbolic frames of higher order stay unimodular") {
  const MapParams params(2.0);
  const HypFrame h = hyperbolic_frame({0.13, 0.71}, params, 8);
  CHECK(h.E * h.F == doctest::Approx(1.0));
  CHECK(h.H < 1e-6);
  const HypFrame hb = hyperbolic_frame({0.13, 0.71}, params, -8);
  CHECK(hb.H < 1e-6);
}

TEST_CASE("H_1 < 1 on a grid") {
  for (double k : {0.6, 1.0, 10.0, 1000.0}) {
    const MapParams params(k);
    double gap = INFINITY;
    for (int i = 0; i < 4096; ++i) {
      const HypFrame h = hyperbolic_frame({0.0, i / 4096.0}, params, 1);
      gap = std::min(gap, h.F - h.E);
    }
    CHECK(gap > 0.0);
  }
}

TEST_CASE("critical constants: closed forms at k = 1") {
  const CriticalConstants c = critical_constants(MapParams(1.0));
  REQUIRE(c.all_defined());
  CHECK(*c.delta_star == doctest::Approx(dstar(1.0)).epsilon(1e-15));
  CHECK(std::abs(*c.delta_star - 0.26267855) < 1e-8);
  CHECK(std::abs(*c.delta_star - 0.262665) < 2e-5);
  CHECK(std::abs(*c.delta_minus - 0.240723) < 1e-6);
  CHECK(std::abs(*c.delta_plus - 0.284880) < 1e-6);
  CHECK(std::abs(*c.delta_hat_T_minus - 0.270030) < 1e-6);
  CHECK(std::abs(*c.delta_hat_T_plus - 0.332063) < 1e-6);
  CHECK(std::abs(*c.delta_T_minus - 0.281437) < 1e-6);
  CHECK(std::abs(*c.delta_T_plus - 0.289711) < 1e-6);
}

TEST_CASE("critical constants: defining equations") {
  for (double k : {0.8, 1.0, 5.0, 20.0, 100.0, 1000.0}) {
    const MapParams params(k);
    const CriticalConstants c = critical_constants(params);
    INFO("k=" << k);
    REQUIRE(c.all_defined());
    CHECK(c.ordered());
    // phi is steep at dT-/dT+ for large k (one ulp of y moves phi by ~1e-8
    // relative at k = 1000), so compare angles instead of phi values.
    CHECK(*c.delta_T_minus >= *c.delta_minus);
    CHECK(*c.delta_T_minus <= *c.delta_plus);
    CHECK(*c.delta_T_plus >= *c.delta_plus);
    CHECK(*c.delta_T_plus <= 0.5);
    CHECK(angle_distance_mod_pi(theta_field(*c.delta_T_minus, params, Time::forward).canonical,
                                theta_field(0.0, params, Time::backward).canonical) < 1e-10);
    CHECK(angle_distance_mod_pi(theta_field(*c.delta_T_plus, params, Time::forward).canonical,
                                theta_field(0.5, params, Time::backward).canonical) < 1e-10);
    CHECK(phi(*c.delta_hat_T_minus, params).value() == doctest::Approx(-kSqrt3 / 2).epsilon(1e-9));
    CHECK(phi(*c.delta_hat_T_plus, params).value() == doctest::Approx(kSqrt3 / 2).epsilon(1e-9));
  }
}

TEST_CASE("property: ordering across k") {
  Gen g(71);
  for (int i = 0; i < 300; ++i) {
    const double k = g.k(0.5, 5000.0);
    const CriticalConstants c = critical_constants(MapParams(k));
    INFO("k=" << k);
    REQUIRE(c.ordered());
  }
}

TEST_CASE("critical constants: large-k limits") {
  const double k = 1000.0;
  const CriticalConstants c = critical_constants(MapParams(k));
  const double unit = 1.0 / (8.0 * kPi * kPi);
  CHECK(k * (*c.delta_star - 0.25) == doctest::Approx(unit).epsilon(0.01));
  CHECK(k * (*c.delta_plus - 0.25) == doctest::Approx((1.0 + kSqrt3) * unit).epsilon(0.01));
  CHECK(k * (0.25 - *c.delta_minus) == doctest::Approx((kSqrt3 - 1.0) * unit).epsilon(0.01));
  CHECK(k * (*c.delta_hat_T_plus - 0.25) == doctest::Approx((1.0 + 3.0 * kSqrt3) * unit).epsilon(0.01));
  CHECK(k * (*c.delta_hat_T_minus - *c.delta_minus) ==
        doctest::Approx(4.0 * kSqrt3 / 3.0 * unit).epsilon(0.02));
  CHECK(k * (*c.delta_hat_T_plus - *c.delta_plus) == doctest::Approx(2.0 * kSqrt3 * unit).epsilon(0.02));
}

TEST_CASE("critical constants below the validity range") {
  const CriticalConstants c = critical_constants(MapParams(0.45));
  CHECK(c.delta_star.has_value());
  CHECK_FALSE(c.delta_hat_T_plus.has_value());
  CHECK_FALSE(c.all_defined());
  CHECK_FALSE(c.ordered());
  CHECK_THROWS_AS(require(c.delta_hat_T_plus, "delta_hat_T_plus"), ParameterError);
  const CriticalConstants tiny = critical_constants(MapParams(0.01));
  CHECK_FALSE(tiny.delta_star.has_value());
  CHECK_FALSE(tiny.delta_T_minus.has_value());
}
