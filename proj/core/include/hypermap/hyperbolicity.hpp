// Uniform hyperbolicity away from the critical strips.
//
// Delta^(m) is the pair of horizontal strips where |psi_c| <= 2m, bounded by
// delta^(+m) = acos(m / pi k) / 2pi and delta^(-m) = acos(-m / pi k) / 2pi.
// Outside them the cone of slopes (1/m, m) is mapped into slopes
// (1 - 1/m, 1 + 1/m) and every vector in it grows by at least m.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypermap/map.hpp"

namespace hypermap {

struct StripSpec {
  int m = 2;
  double delta_pos_m = 0.0;  // delta^(+m) < 1/4
  double delta_neg_m = 0.0;  // delta^(-m) > 1/4

  /// Closed strips [delta^(m), delta^(-m)] u [1 - delta^(-m), 1 - delta^(m)].
  bool contains(double y) const noexcept;
};

/// Throws ParameterError unless 2 <= m < k.
StripSpec delta_strip(int m, const MapParams& params);

struct PushResult {
  double theta_out = 0.0;  // direction of Df v, canonical in [0, pi)
  double norm = 0.0;       // |Df v| for the unit vector v
};

/// Image of the unit vector (cos theta, sin theta) under Df at height y.
PushResult push_vector(double y, double theta, const MapParams& params) noexcept;

struct ConeFailure {
  double y = 0.0;
  double theta = 0.0;
  double slope = 0.0;
  double norm = 0.0;
};

struct ConeReport {
  std::int64_t samples = 0;
  /// Samples failing either conclusion.
  std::int64_t failures = 0;
  /// Image slope outside (1 - 1/m, 1 + 1/m).
  std::int64_t slope_failures = 0;
  /// Image norm below m.
  std::int64_t norm_failures = 0;
  double min_norm = 0.0;
  double slope_min = 0.0;
  double slope_max = 0.0;
  std::uint64_t seed = 0;
  int m = 0;
  double k = 0.0;
  bool inside_strip = false;
  /// Every failing sample, in sample order, for replay.
  std::vector<ConeFailure> failure_list;
};

enum class SampleRegion { outside_strip, inside_strip };

/// Draws n_samples pairs (y, theta): y uniform over the region (the
/// complement of Delta^(m) by default), theta uniform in
/// (atan(1/m), atan(m)). A sample fails unless the image slope lies in
/// (1 - 1/m, 1 + 1/m) and the image norm is >= m. Samples are generated in
/// fixed blocks, each with its own seed derived from `seed`, so results are
/// independent of the worker count.
ConeReport verify_cones(const MapParams& params, int m, std::int64_t n_samples, std::uint64_t seed,
                        SampleRegion region = SampleRegion::outside_strip);

struct ExpansionReport {
  /// |Df v_i| for each completed step.
  std::vector<double> step_growth;
  double log_growth = 0.0;
  /// Set when the orbit point at that step index lies in Delta^(m); the
  /// push stops there.
  std::optional<int> entry_step;
};

/// Pushes (cos theta, sin theta) along the forward orbit of p for up to n
/// steps, stopping early if the orbit enters Delta^(m). Throws
/// ParameterError if theta is not in the cone tan theta in (1/m, m).
ExpansionReport orbit_expansion(const TorusPoint& p, double theta, const MapParams& params, int m,
                                int n);

}  // namespace hypermap
