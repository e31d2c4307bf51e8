// The standard map family on the unit torus: forward/inverse maps,
// Jacobians in both time directions and orbit-Jacobian products.
#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "hypermap/errors.hpp"

namespace hypermap {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces `v` into [0, 1). Results within 1e-15 of 1 snap to 0 so that
/// points sitting on the seam are represented once.
double wrap_unit(double v) noexcept;

/// Signed distance a - b on the circle R/Z, in [-1/2, 1/2).
double circle_delta(double a, double b) noexcept;

enum class Time { forward, backward };

/// Closed-form constants whose existence depends on an arccos argument.
enum class ClosedFormConstant {
  delta_minus,
  delta_star,
  delta_plus,
  delta_hat_T_minus,
  delta_hat_T_plus,
};

/// Family parameter k > 0 plus the validity of each closed-form constant.
class MapParams {
 public:
  explicit MapParams(double k);

  double k() const noexcept { return k_; }

  /// |cos^-1 argument| <= 1 for the named constant at this k.
  bool defined(ClosedFormConstant c) const noexcept;

  /// True when every closed-form constant is defined (k >~ 0.494).
  bool all_defined() const noexcept;

 private:
  double k_;
  std::array<bool, 5> defined_{};
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) noexcept { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) noexcept { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) noexcept { return {s * a.x, s * a.y}; }
  friend Vec2 operator-(Vec2 a) noexcept { return {-a.x, -a.y}; }
};

inline double dot(Vec2 a, Vec2 b) noexcept { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) noexcept { return std::hypot(a.x, a.y); }
inline Vec2 unit_at(double theta) noexcept { return {std::cos(theta), std::sin(theta)}; }

/// A point of the torus in unit coordinates; both coordinates live in [0, 1).
class TorusPoint {
 public:
  TorusPoint() = default;
  TorusPoint(double x, double y) noexcept : x_(wrap_unit(x)), y_(wrap_unit(y)) {}

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }
  /// Diagonal coordinate y - x mod 1.
  double ytilde() const noexcept { return wrap_unit(y_ - x_); }

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;

 private:
  double x_ = 0.0;
  double y_ = 0.0;
};

/// Largest per-coordinate circular distance between two torus points.
double torus_distance(const TorusPoint& a, const TorusPoint& b) noexcept;

struct Mat2 {
  double a11 = 1.0, a12 = 0.0;
  double a21 = 0.0, a22 = 1.0;

  double det() const noexcept { return a11 * a22 - a12 * a21; }
  Vec2 apply(Vec2 v) const noexcept { return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y}; }
  Mat2 inverse() const;

  friend Mat2 operator*(const Mat2& l, const Mat2& r) noexcept {
    return {l.a11 * r.a11 + l.a12 * r.a21, l.a11 * r.a12 + l.a12 * r.a22,
            l.a21 * r.a11 + l.a22 * r.a21, l.a21 * r.a12 + l.a22 * r.a22};
  }
};

TorusPoint map_forward(const TorusPoint& p, const MapParams& params) noexcept;
TorusPoint map_inverse(const TorusPoint& p, const MapParams& params) noexcept;

/// Df at p (forward, depends on y only) or Df^-1 at p (backward, depends on
/// the diagonal coordinate only). Unimodular by construction.
Mat2 jacobian(const TorusPoint& p, const MapParams& params, Time time) noexcept;

inline constexpr int kDefaultOrbitCap = 60;

/// Chain-rule product of Jacobians along the forward (n > 0) or backward
/// (n < 0) orbit of p. Throws IterateDepthError when |n| exceeds `cap` and
/// std::invalid_argument for n == 0.
Mat2 orbit_jacobian(const TorusPoint& p, const MapParams& params, int n,
                    int cap = kDefaultOrbitCap);

}  // namespace hypermap
