#include "hypermap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hypermap::oracle {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool all_finite(const Mat2& m) {
  return std::isfinite(m.a11) && std::isfinite(m.a12) && std::isfinite(m.a21) &&
         std::isfinite(m.a22);
}

// |M (cos t, sin t)|^2 and its t-derivative.
double stretch_sq(const Mat2& m, double t) {
  const Vec2 w = m.apply(unit_at(t));
  return dot(w, w);
}

double stretch_sq_slope(const Mat2& m, double t) {
  const Vec2 w = m.apply(unit_at(t));
  const Vec2 wp = m.apply({-std::sin(t), std::cos(t)});
  return 2.0 * dot(w, wp);
}

}  // namespace

Svd2Result svd2(const Mat2& m) {
  if (!all_finite(m)) throw InputError("svd2: non-finite matrix entry");

  const double scale =
      std::max({std::abs(m.a11), std::abs(m.a12), std::abs(m.a21), std::abs(m.a22)});
  Svd2Result out;
  if (scale == 0.0) {
    out.degenerate = true;
    return out;
  }
  const Mat2 s{m.a11 / scale, m.a12 / scale, m.a21 / scale, m.a22 / scale};

  // M^T M = [[p, q], [q, r]]
  const double p = s.a11 * s.a11 + s.a21 * s.a21;
  const double r = s.a12 * s.a12 + s.a22 * s.a22;
  const double q = s.a11 * s.a12 + s.a21 * s.a22;
  const double half_diff = 0.5 * (p - r);
  const double mean = 0.5 * (p + r);
  const double radius = std::hypot(half_diff, q);

  const double smax = std::sqrt(mean + radius);
  out.sigma_max = smax * scale;
  out.sigma_min = std::abs(s.det()) / smax * scale;
  out.degenerate = radius <= 8.0 * kEps * mean;
  if (!out.degenerate) {
    const double t_max = 0.5 * std::atan2(q, half_diff);
    out.dir_max = DirAngle::from(t_max);
    out.dir_min = DirAngle::from(t_max + 0.5 * std::numbers::pi);
  }
  return out;
}

SweepResult sweep_min_direction(const Mat2& m, int grid) {
  if (!all_finite(m)) throw InputError("sweep_min_direction: non-finite matrix entry");
  if (grid < 1000) throw std::invalid_argument("sweep_min_direction: grid must be >= 1000");

  const double pi = std::numbers::pi;
  const double dt = pi / grid;
  int best = 0;
  double fmin = stretch_sq(m, 0.0);
  double fmax = fmin;
  for (int i = 1; i < grid; ++i) {
    const double f = stretch_sq(m, i * dt);
    if (f < fmin) {
      fmin = f;
      best = i;
    }
    fmax = std::max(fmax, f);
  }

  SweepResult out;
  if (fmax - fmin <= 1e-12 * fmax) {
    out.degenerate = true;
    return out;
  }

  // The minimum is bracketed by the neighbouring grid nodes; the derivative
  // changes sign from negative to positive across it.
  double lo = (best - 1) * dt;
  double hi = (best + 1) * dt;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (stretch_sq_slope(m, mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.dir_min = DirAngle::from(0.5 * (lo + hi));
  return out;
}

double fd_derivative(const std::function<double(double)>& fn, double y, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("fd_derivative: h must be positive");
  return (fn(y + h) - fn(y - h)) / (2.0 * h);
}

}  // namespace hypermap::oracle
