#include "hypermap/map.hpp"

#include <algorithm>
#include <cstdlib>
#include <numbers>

namespace hypermap {

namespace {

constexpr double kSeamSnap = 1e-15;

double arccos_argument(ClosedFormConstant c, double k) {
  const double s3 = std::numbers::sqrt3;
  const double scale = 4.0 * std::numbers::pi * k;
  switch (c) {
    case ClosedFormConstant::delta_minus: return (-1.0 + s3) / scale;
    case ClosedFormConstant::delta_star: return -1.0 / scale;
    case ClosedFormConstant::delta_plus: return (-1.0 - s3) / scale;
    case ClosedFormConstant::delta_hat_T_minus: return -(1.0 + s3 / 3.0) / scale;
    case ClosedFormConstant::delta_hat_T_plus: return -(1.0 + 3.0 * s3) / scale;
  }
  return 2.0;
}

}  // namespace

double wrap_unit(double v) noexcept {
  double r = v - std::floor(v);
  if (r >= 1.0 - kSeamSnap) r = 0.0;
  return r;
}

double circle_delta(double a, double b) noexcept {
  double d = a - b;
  d -= std::floor(d + 0.5);
  return d;
}

double torus_distance(const TorusPoint& a, const TorusPoint& b) noexcept {
  return std::max(std::abs(circle_delta(a.x(), b.x())), std::abs(circle_delta(a.y(), b.y())));
}

MapParams::MapParams(double k) : k_(k) {
  if (!std::isfinite(k) || k <= 0.0) {
    throw ParameterError("map parameter k must be a positive finite number");
  }
  for (int i = 0; i < 5; ++i) {
    const double arg = arccos_argument(static_cast<ClosedFormConstant>(i), k);
    defined_[static_cast<std::size_t>(i)] = std::abs(arg) <= 1.0;
  }
}

bool MapParams::defined(ClosedFormConstant c) const noexcept {
  return defined_[static_cast<std::size_t>(c)];
}

bool MapParams::all_defined() const noexcept {
  for (bool d : defined_) {
    if (!d) return false;
  }
  return true;
}

Mat2 Mat2::inverse() const {
  const double d = det();
  if (d == 0.0 || !std::isfinite(d)) throw InputError("singular matrix");
  return {a22 / d, -a12 / d, -a21 / d, a11 / d};
}

TorusPoint map_forward(const TorusPoint& p, const MapParams& params) noexcept {
  const double kick = params.k() * std::sin(kTwoPi * p.y());
  return {p.x() + kick, p.x() + p.y() + kick};
}

TorusPoint map_inverse(const TorusPoint& p, const MapParams& params) noexcept {
  const double yt = p.y() - p.x();
  return {p.x() - params.k() * std::sin(kTwoPi * yt), yt};
}

Mat2 jacobian(const TorusPoint& p, const MapParams& params, Time time) noexcept {
  if (time == Time::forward) {
    const double psi = kTwoPi * params.k() * std::cos(kTwoPi * p.y());
    return {1.0, psi, 1.0, 1.0 + psi};
  }
  const double psi = kTwoPi * params.k() * std::cos(kTwoPi * p.ytilde());
  return {1.0 + psi, -psi, -1.0, 1.0};
}

Mat2 orbit_jacobian(const TorusPoint& p, const MapParams& params, int n, int cap) {
  if (n == 0) throw std::invalid_argument("orbit_jacobian: n must be nonzero");
  if (std::abs(n) > cap) throw IterateDepthError(n, cap);

  const Time time = n > 0 ? Time::forward : Time::backward;
  Mat2 product = jacobian(p, params, time);
  TorusPoint z = p;
  for (int i = 1; i < std::abs(n); ++i) {
    z = time == Time::forward ? map_forward(z, params) : map_inverse(z, params);
    product = jacobian(z, params, time) * product;
  }
  return product;
}

}  // namespace hypermap
