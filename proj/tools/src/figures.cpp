#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "commands.hpp"
#include "hypermap/coordinates.hpp"
#include "hypermap/foliations.hpp"
#include "hypermap/hyperbolicity.hpp"
#include "hypermap/tangency.hpp"

namespace hypermap::cli {

namespace {

namespace fs = std::filesystem;
constexpr double kPi = std::numbers::pi;

constexpr const char* kInk = "#1d3557";
constexpr const char* kAccent = "#e63946";
constexpr const char* kWarm = "#f4a261";
constexpr const char* kCool = "#a8dadc";

std::string titled(std::string_view what, double k) {
  std::ostringstream s;
  s << what << ", k=" << io::format_real(k);
  return s.str();
}

// Drops vertices closer than `eps` to the last kept one; endpoints stay.
std::vector<Vec2> thin(const std::vector<Vec2>& pts, double eps = 1.5e-3) {
  if (pts.size() <= 2) return pts;
  std::vector<Vec2> out{pts.front()};
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    if (norm(pts[i] - out.back()) >= eps) out.push_back(pts[i]);
  }
  out.push_back(pts.back());
  return out;
}

void save(const fs::path& path, const io::SvgDocument& svg, std::ostream& log) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  svg.write(file);
  if (!file) throw std::runtime_error("write to '" + path.string() + "' failed");
  log << "wrote " << path.filename().string() << '\n';
}

void vertical_marker(io::SvgDocument& svg, const std::optional<double>& at, std::string_view label) {
  if (!at) return;
  for (double v : {*at, 1.0 - *at}) svg.line({v, 0.0}, {v, 1.0}, "#888", 0.8, "4 3");
  svg.text({*at + 0.005, 0.02}, label, 0.018, "#555");
}

// theta / pi and the compressed ratio atan(phi) / pi + 1/2 against the coordinate.
io::SvgDocument field_figure(const MapParams& params, Time time) {
  const bool forward = time == Time::forward;
  io::SvgDocument svg(800, titled(forward ? "forward contracting field" : "backward contracting field",
                                  params.k()));
  const int n = 2048;
  std::vector<Vec2> theta, ratio;
  for (int i = 0; i <= n; ++i) {
    const double c = static_cast<double>(i) / n;
    theta.push_back({c, theta_field(c, params, time).canonical / kPi});
    const double z = forward ? phi(c, params).value() : phi_tilde(c, params).value();
    ratio.push_back({c, std::atan(z) / kPi + 0.5});
  }
  if (params.all_defined()) {
    const CriticalConstants cc = critical_constants(params);
    if (forward) {
      vertical_marker(svg, cc.delta_minus, "d-");
      vertical_marker(svg, cc.delta_star, "d*");
      vertical_marker(svg, cc.delta_plus, "d+");
    } else {
      vertical_marker(svg, cc.delta_star, "d*");
    }
  }
  svg.polyline(ratio, kWarm, 1.2);
  svg.polyline(theta, kInk, 1.8);
  svg.text({0.02, 0.95}, forward ? "theta/pi (dark), atan(phi)/pi + 1/2 (light)"
                                 : "theta/pi (dark), atan(phi~)/pi + 1/2 (light)",
           0.022);
  return svg;
}

io::SvgDocument foliation_figure(const MapParams& params, FieldId field) {
  io::SvgDocument svg(800, titled(std::string(to_string(field)) + " foliation", params.k()));
  const bool forward = field == FieldId::E1 || field == FieldId::F1;
  if (forward && params.all_defined()) {
    const CriticalConstants c = critical_constants(params);
    svg.band(*c.delta_minus, *c.delta_plus, kWarm);
    svg.band(1.0 - *c.delta_plus, 1.0 - *c.delta_minus, kWarm);
  }
  const int seeds = 24;
  for (int i = 0; i < seeds; ++i) {
    // Seeds on the anti-diagonal, transverse to all four fields.
    const TorusPoint start((i + 0.5) / seeds, 1.0 - (i + 0.5) / seeds);
    for (double sign : {1.0, -1.0}) {
      TraceOptions opts;
      const Vec2 d = field_direction(field, start, params);
      const Vec2 base = (d.x < 0.0 || (d.x == 0.0 && d.y < 0.0)) ? -d : d;
      opts.initial_tangent = sign * base;
      try {
        const Leaf leaf = trace_leaf(field, start, params, 2e-3, 1.5, opts);
        for (const auto& seg : seam_segments(leaf)) svg.polyline(thin(seg), kInk, 0.9);
      } catch (const StepSizeError&) {
        // Too steep for this step near a critical line; the neighbours fill the picture.
      }
    }
  }
  if (params.all_defined()) {
    for (const Leaf& leaf : closed_leaves(field, params)) {
      for (const auto& seg : seam_segments(leaf)) svg.polyline(seg, kAccent, 2.0);
    }
  }
  return svg;
}

// Lower branch in (y~, y), zoomed vertically onto the enclosure around 1/4.
io::SvgDocument tangency_figure(const MapParams& params, const TangencyCurves& curves) {
  io::SvgDocument svg(800, titled("tangency curve in (y~, y), lower branch", params.k()));
  const CriticalConstants c = critical_constants(params);
  const double lo = *c.delta_hat_T_minus, hi = *c.delta_hat_T_plus;
  const double pad = 0.15 * (hi - lo);
  const double y0 = lo - pad, y1 = hi + pad;
  const auto to_view = [&](double y) { return (y - y0) / (y1 - y0); };

  svg.band(to_view(lo), to_view(hi), kCool);
  std::vector<Vec2> pts;
  for (const TangencyPoint& t : curves.lower) pts.push_back({t.ytilde, to_view(t.y)});
  svg.polyline(pts, kInk, 1.5);
  for (const Landmark& lm : tangency_landmarks(params)) {
    if (lm.curve_point.y > 0.5) continue;
    const Vec2 at{lm.curve_point.ytilde, to_view(lm.curve_point.y)};
    svg.circle(at, 0.006, kAccent);
    svg.text({at.x + 0.01, at.y + 0.015}, lm.label, 0.022);
  }
  svg.text({0.01, 0.015}, "y=" + io::format_real(y0).substr(0, 8), 0.018, "#555");
  svg.text({0.01, 0.97}, "y=" + io::format_real(y1).substr(0, 8), 0.018, "#555");
  return svg;
}

// The same curve drawn on the torus, x = y - y~.
io::SvgDocument tangency_torus_figure(const MapParams& params, const TangencyCurves& curves) {
  io::SvgDocument svg(800, titled("tangency curve on the torus", params.k()));
  const CriticalConstants c = critical_constants(params);
  svg.band(*c.delta_hat_T_minus, *c.delta_hat_T_plus, kCool);
  svg.band(1.0 - *c.delta_hat_T_plus, 1.0 - *c.delta_hat_T_minus, kCool);
  for (const auto* branch : {&curves.lower, &curves.upper}) {
    Leaf path;
    for (const TangencyPoint& t : *branch) path.lifted.push_back({t.y - t.ytilde, t.y});
    for (const auto& seg : seam_segments(path)) svg.polyline(thin(seg), kInk, 1.5);
  }
  return svg;
}

io::SvgDocument strips_figure(const MapParams& params) {
  io::SvgDocument svg(800, titled("critical strips", params.k()));
  const char* fills[] = {"#ffd6a5", "#fdffb6", "#caffbf", "#9bf6ff"};
  int idx = 0;
  for (int m : {10, 5, 3, 2}) {
    if (m >= params.k()) continue;
    const StripSpec s = delta_strip(m, params);
    svg.band(s.delta_pos_m, s.delta_neg_m, fills[idx % 4], 0.6);
    svg.band(1.0 - s.delta_neg_m, 1.0 - s.delta_pos_m, fills[idx % 4], 0.6);
    svg.text({0.02 + 0.1 * idx, s.delta_neg_m + 0.005}, "m=" + std::to_string(m), 0.02);
    ++idx;
  }
  if (params.all_defined()) {
    const CriticalConstants c = critical_constants(params);
    for (double y : {*c.delta_minus, 1.0 - *c.delta_minus}) {
      svg.line({0.0, y}, {1.0, y}, kAccent, 1.2, "6 3");
    }
    svg.text({0.6, *c.delta_minus - 0.03}, "no tangency below d-", 0.02, kAccent);
  }
  return svg;
}

}  // namespace

int cmd_figures(const RunConfig& cfg, std::ostream& out) {
  const MapParams params(cfg.k);
  const fs::path dir(cfg.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::invalid_argument("cannot create directory '" + cfg.out + "': " + ec.message());

  io::write_header_comment(out, cfg.subcommand, effective_params(cfg));
  save(dir / "field_forward.svg", field_figure(params, Time::forward), out);
  save(dir / "field_backward.svg", field_figure(params, Time::backward), out);
  for (FieldId f : {FieldId::E1, FieldId::F1, FieldId::E_minus1, FieldId::F_minus1}) {
    save(dir / ("foliation_" + std::string(to_string(f)) + ".svg"), foliation_figure(params, f), out);
  }
  if (params.all_defined()) {
    const TangencyCurves curves = tangency_curve(params, 2048);
    save(dir / "tangency.svg", tangency_figure(params, curves), out);
    save(dir / "tangency_torus.svg", tangency_torus_figure(params, curves), out);
  }
  save(dir / "strips.svg", strips_figure(params), out);
  return 0;
}

}  // namespace hypermap::cli
