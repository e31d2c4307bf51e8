#include "hypermap/hyperbolicity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "hypermap/angles.hpp"
#include "hypermap/coordinates.hpp"
#include "hypermap/parallel.hpp"

namespace hypermap {

namespace {

constexpr std::int64_t kBlock = 8192;

struct Interval {
  double lo, hi;
};

struct BlockResult {
  std::int64_t samples = 0;
  std::int64_t failures = 0;
  std::int64_t slope_failures = 0;
  std::int64_t norm_failures = 0;
  double min_norm = std::numeric_limits<double>::infinity();
  double slope_min = std::numeric_limits<double>::infinity();
  double slope_max = -std::numeric_limits<double>::infinity();
  std::vector<ConeFailure> failure_list;
};

std::vector<Interval> sampling_intervals(const StripSpec& s, SampleRegion region) {
  if (region == SampleRegion::outside_strip) {
    return {{0.0, s.delta_pos_m}, {s.delta_neg_m, 1.0 - s.delta_neg_m}, {1.0 - s.delta_pos_m, 1.0}};
  }
  return {{s.delta_pos_m, s.delta_neg_m}, {1.0 - s.delta_neg_m, 1.0 - s.delta_pos_m}};
}

double draw_from(const std::vector<Interval>& parts, double total, double u) {
  double acc = u * total;
  for (const Interval& iv : parts) {
    const double len = iv.hi - iv.lo;
    if (acc < len) return iv.lo + acc;
    acc -= len;
  }
  return parts.back().hi;
}

}  // namespace

bool StripSpec::contains(double y) const noexcept {
  return (y >= delta_pos_m && y <= delta_neg_m) || (y >= 1.0 - delta_neg_m && y <= 1.0 - delta_pos_m);
}

StripSpec delta_strip(int m, const MapParams& params) {
  if (m < 2) throw ParameterError("delta_strip: m must be >= 2");
  if (static_cast<double>(m) >= params.k()) {
    throw ParameterError("delta_strip: m must be < k (m=" + std::to_string(m) +
                         ", k=" + std::to_string(params.k()) + ")");
  }
  const double arg = m / (std::numbers::pi * params.k());
  return {m, std::acos(arg) / kTwoPi, std::acos(-arg) / kTwoPi};
}

PushResult push_vector(double y, double theta, const MapParams& params) noexcept {
  const double p = psi(y, params);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Vec2 w{c + p * s, c + (1.0 + p) * s};
  return {canonical_mod_pi(std::atan2(w.y, w.x)), norm(w)};
}

ConeReport verify_cones(const MapParams& params, int m, std::int64_t n_samples, std::uint64_t seed,
                        SampleRegion region) {
  if (n_samples < 0) throw std::invalid_argument("verify_cones: n_samples must be >= 0");
  const StripSpec strip = delta_strip(m, params);
  const std::vector<Interval> parts = sampling_intervals(strip, region);
  double total = 0.0;
  for (const Interval& iv : parts) total += iv.hi - iv.lo;

  const double inv_m = 1.0 / m;
  const double theta_lo = std::atan(inv_m);
  const double theta_hi = std::atan(static_cast<double>(m));
  const double two_m = 2.0 * m;

  const auto blocks = static_cast<std::size_t>((n_samples + kBlock - 1) / kBlock);
  std::vector<BlockResult> results(blocks);
  parallel_for(blocks, [&](std::size_t b) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(b)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> angle(theta_lo, theta_hi);

    BlockResult& r = results[b];
    const std::int64_t begin = static_cast<std::int64_t>(b) * kBlock;
    const std::int64_t end = std::min(n_samples, begin + kBlock);
    for (std::int64_t i = begin; i < end; ++i) {
      double y = 0.0;
      // Redraw the measure-zero boundary cases so the region is open/closed
      // exactly as stated.
      for (;;) {
        y = draw_from(parts, total, unit(rng));
        const double ap = std::abs(psi(y, params));
        if (region == SampleRegion::outside_strip ? (!strip.contains(y) && ap > two_m)
                                                  : strip.contains(y)) {
          break;
        }
      }
      double theta = angle(rng);
      while (!(theta > theta_lo && theta < theta_hi)) theta = angle(rng);

      const double p = psi(y, params);
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      const Vec2 w{c + p * s, c + (1.0 + p) * s};
      const double slope = w.y / w.x;
      const double len = norm(w);

      ++r.samples;
      r.min_norm = std::min(r.min_norm, len);
      r.slope_min = std::min(r.slope_min, slope);
      r.slope_max = std::max(r.slope_max, slope);
      const bool slope_ok = slope > 1.0 - inv_m && slope < 1.0 + inv_m;
      const bool norm_ok = len >= m;
      r.slope_failures += !slope_ok;
      r.norm_failures += !norm_ok;
      if (!slope_ok || !norm_ok) {
        ++r.failures;
        r.failure_list.push_back({y, theta, slope, len});
      }
    }
  });

  ConeReport rep;
  rep.seed = seed;
  rep.m = m;
  rep.k = params.k();
  rep.inside_strip = region == SampleRegion::inside_strip;
  rep.min_norm = std::numeric_limits<double>::infinity();
  rep.slope_min = std::numeric_limits<double>::infinity();
  rep.slope_max = -std::numeric_limits<double>::infinity();
  for (BlockResult& r : results) {
    rep.samples += r.samples;
    rep.failures += r.failures;
    rep.slope_failures += r.slope_failures;
    rep.norm_failures += r.norm_failures;
    rep.min_norm = std::min(rep.min_norm, r.min_norm);
    rep.slope_min = std::min(rep.slope_min, r.slope_min);
    rep.slope_max = std::max(rep.slope_max, r.slope_max);
    rep.failure_list.insert(rep.failure_list.end(), r.failure_list.begin(), r.failure_list.end());
  }
  return rep;
}

ExpansionReport orbit_expansion(const TorusPoint& p, double theta, const MapParams& params, int m,
                                int n) {
  if (n < 1) throw std::invalid_argument("orbit_expansion: n must be >= 1");
  const StripSpec strip = delta_strip(m, params);
  const double t = std::tan(canonical_mod_pi(theta));
  if (!(t > 1.0 / m && t < m)) {
    throw ParameterError("orbit_expansion: initial direction is outside the cone (1/m, m)");
  }

  ExpansionReport rep;
  TorusPoint z = p;
  double dir = theta;
  for (int i = 0; i < n; ++i) {
    if (strip.contains(z.y())) {
      rep.entry_step = i;
      break;
    }
    const PushResult step = push_vector(z.y(), dir, params);
    rep.step_growth.push_back(step.norm);
    rep.log_growth += std::log(step.norm);
    dir = step.theta_out;
    z = map_forward(z, params);
  }
  return rep;
}

}  // namespace hypermap
