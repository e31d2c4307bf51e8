#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "hypermap/coordinates.hpp"
#include "hypermap/foliations.hpp"
#include "hypermap/hyperbolicity.hpp"
#include "hypermap/oracle.hpp"
#include "hypermap/tangency.hpp"

namespace hypermap::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kPoints = 4096;

enum class Status { pass, fail, skip };

struct Outcome {
  Status status = Status::pass;
  std::string detail;
};

Outcome measured(double value, double limit, std::string_view what = "max_err") {
  std::ostringstream s;
  s << what << "=" << io::format_real(value) << " limit=" << limit;
  return {value < limit ? Status::pass : Status::fail, s.str()};
}

Outcome skipped(std::string why) { return {Status::skip, std::move(why)}; }

using Rng = std::mt19937_64;

double unit(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

Outcome oracle_equivalence(const MapParams& params, Time time, Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < kPoints; ++i) {
    const TorusPoint p(unit(rng), unit(rng));
    const oracle::Svd2Result s = oracle::svd2(jacobian(p, params, time));
    const double coord = time == Time::forward ? p.y() : p.ytilde();
    worst = std::max(worst, angle_distance_mod_pi(theta_field(coord, params, time).canonical,
                                                  s.dir_min.canonical));
  }
  return measured(worst, 1e-9);
}

Outcome unimodularity(const MapParams& params, Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < kPoints; ++i) {
    const TorusPoint p(unit(rng), unit(rng));
    const HypFrame h = hyperbolic_frame(p, params, 1);
    const double e_oracle = oracle::svd2(jacobian(p, params, Time::forward)).sigma_min;
    worst = std::max(worst, std::abs(e_oracle * h.F - 1.0));
  }
  return measured(worst, 1e-10);
}

Outcome tan_double_angle(const MapParams& params, Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < kPoints; ++i) {
    const double y = unit(rng);
    for (Time t : {Time::forward, Time::backward}) {
      const double z = t == Time::forward ? phi(y, params).value() : phi_tilde(y, params).value();
      const double two_theta = 2.0 * theta_field(y, params, t).canonical;
      worst = std::max(worst, angle_distance_mod_pi(two_theta, std::atan(z)));
    }
  }
  return measured(worst, 1e-9, "max_angle_err");
}

Outcome symmetry(const MapParams& params, Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < kPoints; ++i) {
    const double y = unit(rng);
    for (Time t : {Time::forward, Time::backward}) {
      worst = std::max(worst, std::abs(theta_field(y, params, t).canonical -
                                       theta_field(1.0 - y, params, t).canonical));
    }
  }
  return measured(worst, 1e-12);
}

Outcome ordering(const MapParams& params) {
  const CriticalConstants c = critical_constants(params);
  if (!c.all_defined()) return skipped("constants undefined at this k");
  return {c.ordered() ? Status::pass : Status::fail,
          c.ordered() ? "ordered" : "ordering violated"};
}

Outcome landmark_residual(const MapParams& params, bool table) {
  if (!params.all_defined()) return skipped("landmarks undefined at this k");
  double worst = 0.0;
  std::string worst_label;
  for (const Landmark& lm : tangency_landmarks(params)) {
    if (!lm.available) return {Status::fail, lm.label + " unavailable"};
    const double r = table ? lm.point.residual : lm.curve_point.residual;
    if (r >= worst) {
      worst = r;
      worst_label = lm.label;
    }
  }
  Outcome o = measured(worst, 1e-8, "max_residual");
  o.detail += " at=" + worst_label;
  return o;
}

Outcome tangency_curve_check(const MapParams& params) {
  if (!params.all_defined()) return skipped("constants undefined at this k");
  const CriticalConstants c = critical_constants(params);
  const double lo = *c.delta_hat_T_minus, hi = *c.delta_hat_T_plus;
  const TangencyCurves curves = tangency_curve(params, kPoints);
  double worst = 0.0;
  int outside = 0;
  for (const auto* branch : {&curves.lower, &curves.upper}) {
    for (const TangencyPoint& t : *branch) {
      worst = std::max(worst, t.residual);
      const bool inside = (t.y >= lo && t.y <= hi) || (t.y >= 1.0 - hi && t.y <= 1.0 - lo);
      outside += !inside;
    }
  }
  Outcome o = measured(worst, 1e-8, "max_residual");
  o.detail += " outside_enclosure=" + std::to_string(outside);
  if (outside > 0) o.status = Status::fail;
  return o;
}

Outcome no_tangency(const MapParams& params) {
  if (!params.all_defined()) return skipped("constants undefined at this k");
  const NoTangencyReport r = no_tangency_scan(params, 256);
  return {r.min_residual > 0.0 ? Status::pass : Status::fail,
          "min_residual=" + io::format_real(r.min_residual)};
}

Outcome derivative_identities(const MapParams& params, Rng& rng) {
  if (!params.all_defined()) return skipped("constants undefined at this k");
  const CriticalConstants c = critical_constants(params);
  const double asym[] = {*c.delta_minus, *c.delta_plus, 1.0 - *c.delta_plus, 1.0 - *c.delta_minus,
                         *c.delta_star,  1.0 - *c.delta_star, 0.0, 0.5, 1.0};
  double worst = 0.0;
  for (int n = 0; n < 1000;) {
    const double y = unit(rng);
    if (std::any_of(std::begin(asym), std::end(asym), [&](double a) { return std::abs(y - a) < 1e-3; })) {
      continue;
    }
    const double fd = oracle::fd_derivative([&](double s) { return phi(s, params).value(); }, y, 1e-6);
    const double fdt =
        oracle::fd_derivative([&](double s) { return phi_tilde(s, params).value(); }, y, 1e-6);
    const double d = phi_prime(y, params), dt = phi_tilde_prime(y, params);
    worst = std::max({worst, std::abs(fd - d) / std::abs(d), std::abs(fdt - dt) / std::abs(dt)});
    ++n;
  }
  return measured(worst, 1e-5, "max_rel_err");
}

Outcome remark_facts(const MapParams& params, Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 1024; ++i) {
    worst = std::max(worst, std::abs(push_vector(unit(rng), 0.0, params).theta_out - kPi / 4));
  }
  worst = std::max(worst, angle_distance_mod_pi(push_vector(0.25, 3 * kPi / 4, params).theta_out, 0.0));
  return measured(worst, 1e-12);
}

Outcome closed_leaves_check(const MapParams& params) {
  if (!params.all_defined()) return skipped("constants undefined at this k");
  const double ds = *critical_constants(params).delta_star;
  TraceOptions open;
  open.detect_closure = false;
  double worst = 0.0;
  const Leaf f1 = trace_leaf(FieldId::F1, {0.3, ds}, params, 1e-3, 10.0, open);
  for (const TorusPoint& v : f1.vertices) worst = std::max(worst, std::abs(circle_delta(v.y(), ds)));
  const Leaf em1 = trace_leaf(FieldId::E_minus1, {0.0, ds}, params, 1e-3, 10.0, open);
  for (const TorusPoint& v : em1.vertices) {
    worst = std::max(worst, std::abs(circle_delta(v.ytilde(), ds)));
  }
  return measured(worst, 1e-6, "max_drift");
}

struct ConeOutcomes {
  Outcome slope, norm, control;
};

ConeOutcomes cones(const MapParams& params, const RunConfig& cfg) {
  std::ostringstream slope, norm, control;
  bool slope_ok = true, norm_ok = true, control_ok = true;
  int used = 0;
  for (int m : {2, 3, 5, 10}) {
    if (m >= params.k()) continue;
    ++used;
    const ConeReport out = verify_cones(params, m, cfg.samples, cfg.seed);
    const ConeReport in = verify_cones(params, m, cfg.samples, cfg.seed, SampleRegion::inside_strip);
    slope_ok = slope_ok && out.slope_failures == 0;
    norm_ok = norm_ok && out.norm_failures == 0;
    control_ok = control_ok && (cfg.samples == 0 || in.failures > 0);
    slope << " m" << m << '=' << out.slope_failures;
    norm << " m" << m << '=' << out.norm_failures << "(min_norm=" << io::format_real(out.min_norm)
         << ')';
    control << " m" << m << '=' << in.failures;
  }
  if (used == 0) {
    return {skipped("no m in {2,3,5,10} below k"), skipped("no m in {2,3,5,10} below k"),
            skipped("no m in {2,3,5,10} below k")};
  }
  const auto st = [](bool ok) { return ok ? Status::pass : Status::fail; };
  return {{st(slope_ok), "slope_failures:" + slope.str()},
          {st(norm_ok), "norm_failures:" + norm.str()},
          {st(control_ok), "inside_failures:" + control.str()}};
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const std::vector<double> ks = parse_k_list(cfg.k_list);
  io::write_header_comment(out, cfg.subcommand, effective_params(cfg));
  io::CsvWriter csv(out, {"check", "k", "status", "detail"});

  int failed = 0;
  const auto emit = [&](const char* name, double k, const Outcome& o) {
    static constexpr const char* kNames[] = {"pass", "fail", "skip"};
    failed += o.status == Status::fail;
    csv.row({name, io::format_real(k), kNames[static_cast<int>(o.status)], o.detail});
  };

  for (std::size_t ki = 0; ki < ks.size(); ++ki) {
    const double k = ks[ki];
    const MapParams params(k);
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(ki)};
    Rng rng(seq);
    emit("oracle_forward", k, oracle_equivalence(params, Time::forward, rng));
    emit("oracle_backward", k, oracle_equivalence(params, Time::backward, rng));
    emit("unimodularity", k, unimodularity(params, rng));
    emit("tan_double_angle", k, tan_double_angle(params, rng));
    emit("symmetry", k, symmetry(params, rng));
    emit("constant_ordering", k, ordering(params));
    emit("landmark_table_residual", k, landmark_residual(params, true));
    emit("landmark_curve_residual", k, landmark_residual(params, false));
    emit("tangency_curve", k, tangency_curve_check(params));
    emit("no_tangency_region", k, no_tangency(params));
    emit("derivative_identities", k, derivative_identities(params, rng));
    emit("remark_facts", k, remark_facts(params, rng));
    emit("closed_leaves", k, closed_leaves_check(params));
    const ConeOutcomes c = cones(params, cfg);
    emit("cone_slope", k, c.slope);
    emit("cone_norm", k, c.norm);
    emit("cone_negative_control", k, c.control);
  }
  return failed > 0 ? 1 : 0;
}

}  // namespace hypermap::cli
