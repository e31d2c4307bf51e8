#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hypermap {

/// Reduces an angle to the canonical class representative in [0, pi).
inline double canonical_mod_pi(double theta) noexcept {
  constexpr double pi = std::numbers::pi;
  double r = std::fmod(theta, pi);
  if (r < 0.0) r += pi;
  if (r >= pi) r = 0.0;
  return r;
}

/// Distance between two undirected directions, in [0, pi/2].
inline double angle_distance_mod_pi(double a, double b) noexcept {
  const double d = canonical_mod_pi(a - b);
  return std::min(d, std::numbers::pi - d);
}

/// An undirected direction. `canonical` is in [0, pi); `lifted` is a real
/// representative of the same class, used when tracking continuity.
struct DirAngle {
  double canonical = 0.0;
  double lifted = 0.0;

  static DirAngle from(double theta) noexcept { return {canonical_mod_pi(theta), theta}; }
};

}  // namespace hypermap
