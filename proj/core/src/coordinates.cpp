#include "hypermap/coordinates.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "hypermap/oracle.hpp"
#include "hypermap/tangency.hpp"

namespace hypermap {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;

// Absolute error bound on a computed psi value.
double psi_error(const MapParams& params) noexcept {
  return 8.0 * kEps * kTwoPi * params.k() * (1.0 + kTwoPi);
}

double closed_form(double numerator, double k) {
  return std::acos(numerator / (4.0 * kPi * k)) / kTwoPi;
}

}  // namespace

double psi(double y, const MapParams& params, PsiKind kind, Frame /*frame*/) noexcept {
  // Fold y in [1/2, 1) onto 1 - y (exact there) so mirrored inputs agree bitwise.
  if (y >= 0.5 && y <= 1.0) {
    const double a = kTwoPi * (1.0 - y);
    return kTwoPi * params.k() * (kind == PsiKind::cos ? std::cos(a) : -std::sin(a));
  }
  const double a = kTwoPi * y;
  return kTwoPi * params.k() * (kind == PsiKind::cos ? std::cos(a) : std::sin(a));
}

double psi_cos_prime(double y, const MapParams& params) noexcept {
  if (y >= 0.5 && y <= 1.0) return kTwoPi * kTwoPi * params.k() * std::sin(kTwoPi * (1.0 - y));
  return -kTwoPi * kTwoPi * params.k() * std::sin(kTwoPi * y);
}

double ExtendedReal::value() const noexcept {
  if (infinite) {
    const bool negative = std::signbit(num) != std::signbit(den);
    return negative ? -std::numeric_limits<double>::infinity()
                    : std::numeric_limits<double>::infinity();
  }
  return num / den;
}

ExtendedReal phi(double y, const MapParams& params) noexcept {
  const double p = psi(y, params);
  ExtendedReal r{-poly_p1_prime(p), poly_p1(p), false};
  const double den_err =
      std::abs(poly_p1_prime(p)) * psi_error(params) + 4.0 * kEps * (2.0 * p * p + 2.0 * std::abs(p) + 1.0);
  r.infinite = std::abs(r.den) <= den_err;
  return r;
}

ExtendedReal phi_tilde(double ytilde, const MapParams& params) noexcept {
  const double p = psi(ytilde, params, PsiKind::cos, Frame::diagonal);
  ExtendedReal r{-2.0 * poly_p2(p), poly_p2_prime(p), false};
  const double den_err = 2.0 * psi_error(params) + 4.0 * kEps * (1.0 + 2.0 * std::abs(p));
  r.infinite = std::abs(r.den) <= den_err;
  return r;
}

double phi_prime(double y, const MapParams& params) noexcept {
  const double p = psi(y, params);
  const double p1 = poly_p1(p);
  return 8.0 * poly_p2(p) / (p1 * p1) * psi_cos_prime(y, params);
}

double phi_tilde_prime(double ytilde, const MapParams& params) noexcept {
  const double p = psi(ytilde, params, PsiKind::cos, Frame::diagonal);
  const double d = poly_p2_prime(p);
  return -2.0 * poly_p1(p) / (d * d) * psi_cos_prime(ytilde, params);
}

DirAngle theta_field(double coord, const MapParams& params, Time time) noexcept {
  const double p = psi(coord, params);
  double theta = 0.0;
  if (time == Time::forward) {
    // Minimizer of |Df v|: 2t = atan2(-P1', P1).
    theta = 0.5 * std::atan2(-poly_p1_prime(p), poly_p1(p));
  } else {
    // Minimizer of |Df^-1 v|: 2t = atan2(2 P2, -P2'); P2 > 0 keeps t in (0, pi/2).
    theta = 0.5 * std::atan2(2.0 * poly_p2(p), -poly_p2_prime(p));
  }
  const DirAngle d = DirAngle::from(theta);
  return {d.canonical, d.canonical};
}

Vec2 unit_vector(DirectionField field, double coord, const MapParams& params) noexcept {
  const Time time =
      (field == DirectionField::e1 || field == DirectionField::f1) ? Time::forward : Time::backward;
  const double t = theta_field(coord, params, time).canonical;
  const Vec2 e = unit_at(t);
  if (field == DirectionField::e1 || field == DirectionField::e_minus1) return e;
  return {-e.y, e.x};
}

HypFrame hyperbolic_frame(const TorusPoint& p, const MapParams& params, int n, int cap) {
  const Mat2 m = orbit_jacobian(p, params, n, cap);
  const oracle::Svd2Result s = oracle::svd2(m);
  if (s.degenerate) throw ConformalPointError(s.sigma_max);
  HypFrame f;
  f.order = n;
  f.F = s.sigma_max;
  f.E = 1.0 / s.sigma_max;
  f.H = f.E / f.F;
  f.e_dir = s.dir_min;
  f.f_dir = s.dir_max;
  return f;
}

bool CriticalConstants::all_defined() const noexcept {
  return delta_minus && delta_star && delta_plus && delta_hat_T_minus && delta_hat_T_plus &&
         delta_T_minus && delta_T_plus;
}

bool CriticalConstants::ordered() const noexcept {
  if (!all_defined()) return false;
  const double seq[] = {*delta_minus,   0.25,          *delta_star,  *delta_hat_T_minus,
                        *delta_T_minus, *delta_plus,   *delta_T_plus, *delta_hat_T_plus};
  for (std::size_t i = 0; i + 1 < std::size(seq); ++i) {
    if (!(seq[i] < seq[i + 1])) return false;
  }
  return true;
}

CriticalConstants critical_constants(const MapParams& params) {
  const double k = params.k();
  const double s3 = std::numbers::sqrt3;
  CriticalConstants c;
  if (params.defined(ClosedFormConstant::delta_minus)) c.delta_minus = closed_form(-1.0 + s3, k);
  if (params.defined(ClosedFormConstant::delta_star)) c.delta_star = closed_form(-1.0, k);
  if (params.defined(ClosedFormConstant::delta_plus)) c.delta_plus = closed_form(-1.0 - s3, k);
  if (params.defined(ClosedFormConstant::delta_hat_T_minus))
    c.delta_hat_T_minus = closed_form(-(1.0 + s3 / 3.0), k);
  if (params.defined(ClosedFormConstant::delta_hat_T_plus))
    c.delta_hat_T_plus = closed_form(-(1.0 + 3.0 * s3), k);

  if (c.delta_minus && c.delta_plus) {
    c.delta_T_minus = phi_inverse_in(phi_tilde(0.0, params).value(), params, *c.delta_minus,
                                     *c.delta_plus);
    c.delta_T_plus = phi_inverse_in(phi_tilde(0.5, params).value(), params, *c.delta_plus, 0.5);
  }
  return c;
}

double require(const std::optional<double>& c, const char* name) {
  if (!c) throw ParameterError(std::string("constant ") + name + " is undefined for this k");
  return *c;
}

}  // namespace hypermap
