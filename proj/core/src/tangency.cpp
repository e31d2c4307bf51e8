#include "hypermap/tangency.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hypermap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCushion = 1e-12;

// atan-compressed mismatch phi(y) - z; bounded, with the same roots.
double phi_mismatch(double y, double z, const MapParams& params) {
  return std::atan(phi(y, params).value()) - std::atan(z);
}

// Bisection on [y - w, y + w] when the mismatch changes sign there. Keeps
// the input when no sign change is found or the result is not better.
double polish(double y, double z, const MapParams& params, double w, double tol) {
  double lo = y - w;
  double hi = y + w;
  double flo = phi_mismatch(lo, z, params);
  const double fhi = phi_mismatch(hi, z, params);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) return y;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = phi_mismatch(mid, z, params);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  const double out = 0.5 * (lo + hi);
  return std::abs(phi_mismatch(out, z, params)) <= std::abs(phi_mismatch(y, z, params)) ? out : y;
}

bool in_interval(double y, double lo, double hi) { return y >= lo - kCushion && y <= hi + kCushion; }

struct TangencyRegions {
  double delta_minus, delta_star, delta_plus;
};

TangencyRegions regions_for(const MapParams& params) {
  const CriticalConstants c = critical_constants(params);
  return {require(c.delta_minus, "delta-"), require(c.delta_star, "delta*"),
          require(c.delta_plus, "delta+")};
}

std::array<double, 2> gamma_with(double ytilde, const MapParams& params, const TangencyRegions& r) {
  ytilde = wrap_unit(ytilde);
  const ExtendedReal target = phi_tilde(ytilde, params);
  if (target.infinite) return {r.delta_plus, wrap_unit(1.0 - r.delta_plus)};

  const bool outer = ytilde <= r.delta_star || ytilde >= 1.0 - r.delta_star;
  std::vector<double> picked;
  for (const PhiPreimage& pre : phi_inverse(target.value(), params)) {
    const bool allowed =
        outer ? (in_interval(pre.y, r.delta_minus, r.delta_plus) ||
                 in_interval(pre.y, 1.0 - r.delta_plus, 1.0 - r.delta_minus))
              : in_interval(pre.y, r.delta_plus, 1.0 - r.delta_plus);
    // Candidates hugging an asymptote from the wrong side satisfy
    // phi = phi~ but the angles differ by pi/2; reject those.
    if (allowed && tangency_residual(ytilde, pre.y, params) < 0.25 * kPi) picked.push_back(pre.y);
  }
  if (picked.size() != 2) {
    throw ConsistencyError("gamma: expected two tangency values at ytilde=" +
                           std::to_string(ytilde) + ", found " + std::to_string(picked.size()));
  }
  std::sort(picked.begin(), picked.end());
  return {picked[0], picked[1]};
}

}  // namespace

std::vector<PhiPreimage> phi_inverse(double z, const MapParams& params) {
  if (z == 0.0) throw std::invalid_argument("phi_inverse: z == 0 (zero set is {delta*, 1-delta*})");
  if (!std::isfinite(z)) throw std::invalid_argument("phi_inverse: z must be finite");

  // 2 z psi^2 + 2 (z + 2) psi + (2 - z) = 0
  const double a = 2.0 * z;
  const double b = 2.0 * (z + 2.0);
  const double c = 2.0 - z;
  const double sq = 2.0 * std::sqrt(3.0 * z * z + 4.0);
  const double sb = b < 0.0 ? -1.0 : 1.0;
  const double q = -0.5 * (b + sb * sq);
  const double roots[2] = {q / a, c / q};
  const int signs[2] = {static_cast<int>(-sb), static_cast<int>(sb)};

  std::vector<PhiPreimage> out;
  const double scale = kTwoPi * params.k();
  for (int i = 0; i < 2; ++i) {
    const double arg = roots[i] / scale;
    if (!(std::abs(arg) <= 1.0)) continue;
    const double y0 = std::acos(arg) / kTwoPi;
    const double y = polish(y0, z, params, 1e-12, 1e-17);
    out.push_back({wrap_unit(y), signs[i], false});
    const double m = wrap_unit(1.0 - y);
    if (std::abs(circle_delta(m, y)) > 0.0) out.push_back({m, signs[i], true});
  }
  return out;
}

std::optional<double> phi_inverse_in(double z, const MapParams& params, double lo, double hi) {
  std::optional<double> found;
  for (const PhiPreimage& pre : phi_inverse(z, params)) {
    if (!in_interval(pre.y, lo, hi)) continue;
    if (found) return std::nullopt;
    found = pre.y;
  }
  if (found) found = polish(*found, z, params, 1e-9, 1e-13);
  return found;
}

double tangency_residual(double ytilde, double y, const MapParams& params) noexcept {
  return angle_distance_mod_pi(theta_field(y, params, Time::forward).canonical,
                               theta_field(ytilde, params, Time::backward).canonical);
}

std::array<double, 2> gamma(double ytilde, const MapParams& params) {
  return gamma_with(ytilde, params, regions_for(params));
}

TangencyCurves tangency_curve(const MapParams& params, int n_samples) {
  if (n_samples < 16) throw std::invalid_argument("tangency_curve: n_samples must be >= 16");
  const TangencyRegions r = regions_for(params);
  const double max_gap = 10.0 / n_samples;

  TangencyCurves curves;
  curves.lower.reserve(static_cast<std::size_t>(n_samples));
  curves.upper.reserve(static_cast<std::size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    const double yt = static_cast<double>(i) / n_samples;
    std::array<double, 2> ys = gamma_with(yt, params, r);
    if (i > 0) {
      // Continuity: keep the pairing that moves each branch least.
      const double straight = std::abs(ys[0] - curves.lower.back().y) +
                              std::abs(ys[1] - curves.upper.back().y);
      const double swapped = std::abs(ys[1] - curves.lower.back().y) +
                             std::abs(ys[0] - curves.upper.back().y);
      if (swapped < straight) std::swap(ys[0], ys[1]);
      if (std::abs(ys[0] - curves.lower.back().y) >= max_gap ||
          std::abs(ys[1] - curves.upper.back().y) >= max_gap) {
        throw ConsistencyError("tangency_curve: branch discontinuity at ytilde=" +
                               std::to_string(yt));
      }
    }
    curves.lower.push_back({yt, ys[0], Branch::lower, tangency_residual(yt, ys[0], params)});
    curves.upper.push_back({yt, ys[1], Branch::upper, tangency_residual(yt, ys[1], params)});
  }
  return curves;
}

std::array<Landmark, 8> tangency_landmarks(const MapParams& params) {
  const CriticalConstants c = critical_constants(params);
  const auto one_minus = [](const std::optional<double>& v) -> std::optional<double> {
    if (!v) return std::nullopt;
    return 1.0 - *v;
  };
  const std::optional<double> half = 0.5;
  const std::optional<double> zero = 0.0;
  const std::array<std::pair<std::optional<double>, std::optional<double>>, 8> table = {{
      {zero, c.delta_T_minus},
      {c.delta_minus, c.delta_hat_T_minus},
      {c.delta_star, c.delta_plus},
      {c.delta_plus, c.delta_hat_T_plus},
      {half, c.delta_T_plus},
      {one_minus(c.delta_plus), c.delta_hat_T_plus},
      {one_minus(c.delta_star), c.delta_plus},
      {one_minus(c.delta_minus), c.delta_hat_T_minus},
  }};

  std::array<Landmark, 8> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    out[i].label = "P" + std::to_string(i + 1);
    const auto& [yt, y] = table[i];
    if (!yt || !y) continue;
    out[i].available = true;
    const Branch branch = *y < 0.5 ? Branch::lower : Branch::upper;
    out[i].point = {*yt, *y, branch, tangency_residual(*yt, *y, params)};
    const std::array<double, 2> g = gamma(*yt, params);
    const double yc =
        std::abs(circle_delta(g[0], *y)) <= std::abs(circle_delta(g[1], *y)) ? g[0] : g[1];
    out[i].curve_point = {*yt, yc, branch, tangency_residual(*yt, yc, params)};
  }
  return out;
}

NoTangencyReport no_tangency_scan(const MapParams& params, int grid) {
  if (grid < 64) throw std::invalid_argument("no_tangency_scan: grid must be >= 64");
  const double dm = require(critical_constants(params).delta_minus, "delta-");
  const int half = grid / 2;

  NoTangencyReport rep;
  rep.grid = grid;
  rep.min_residual = kPi;
  for (int j = 0; j < grid; ++j) {
    const double y = j < half ? dm * j / (half - 1)
                              : 1.0 - dm * (j - half) / (grid - half - 1);
    const double t1 = theta_field(wrap_unit(y), params, Time::forward).canonical;
    for (int i = 0; i < grid; ++i) {
      const TorusPoint z(static_cast<double>(i) / grid, y);
      const double res =
          angle_distance_mod_pi(t1, theta_field(z.ytilde(), params, Time::backward).canonical);
      if (res < rep.min_residual) {
        rep.min_residual = res;
        rep.argmin = z;
      }
    }
  }
  return rep;
}

}  // namespace hypermap
