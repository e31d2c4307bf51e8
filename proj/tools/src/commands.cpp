#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "hypermap/coordinates.hpp"
#include "hypermap/foliations.hpp"
#include "hypermap/hyperbolicity.hpp"
#include "hypermap/tangency.hpp"

namespace hypermap::cli {

using io::CsvWriter;
using io::format_real;

namespace {

std::string opt_int(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

std::string real_or_nan(const std::optional<double>& v) {
  return format_real(v ? *v : std::nan(""));
}

void header(std::ostream& out, const RunConfig& cfg) {
  io::write_header_comment(out, cfg.subcommand, effective_params(cfg));
}

// Shades the strips around 1/4 and 3/4 bounded by the given pair.
void shade_pair(io::SvgDocument& svg, const std::optional<double>& lo,
                const std::optional<double>& hi, std::string_view fill) {
  if (!lo || !hi) return;
  svg.band(*lo, *hi, fill);
  svg.band(1.0 - *hi, 1.0 - *lo, fill);
}

}  // namespace

std::vector<io::Param> effective_params(const RunConfig& cfg) {
  const std::string& s = cfg.subcommand;
  std::vector<io::Param> p;
  if (s != "verify") p.emplace_back("k", format_real(cfg.k));
  if (s == "constants") {
    p.emplace_back("m", opt_int(cfg.m));
  } else if (s == "field") {
    p.emplace_back("time", cfg.time);
    p.emplace_back("grid", std::to_string(cfg.grid));
  } else if (s == "leaf") {
    p.emplace_back("field", cfg.field);
    p.emplace_back("x", format_real(cfg.x));
    p.emplace_back("y", format_real(cfg.y));
    p.emplace_back("step", format_real(cfg.step));
    p.emplace_back("max_arc", format_real(cfg.max_arc));
    p.emplace_back("adaptive", cfg.adaptive ? "true" : "false");
    p.emplace_back("format", cfg.format);
  } else if (s == "tangency") {
    p.emplace_back("samples", std::to_string(cfg.samples));
    p.emplace_back("landmarks", cfg.landmarks ? "true" : "false");
    p.emplace_back("format", cfg.format);
  } else if (s == "cones") {
    p.emplace_back("m", opt_int(cfg.m));
    p.emplace_back("samples", std::to_string(cfg.samples));
    p.emplace_back("seed", std::to_string(cfg.seed));
    p.emplace_back("region", cfg.inside_strip ? "inside" : "outside");
    p.emplace_back("format", cfg.format);
  } else if (s == "verify") {
    p.emplace_back("k_list", cfg.k_list);
    p.emplace_back("samples", std::to_string(cfg.samples));
    p.emplace_back("seed", std::to_string(cfg.seed));
  }
  return p;
}

std::vector<double> parse_k_list(const std::string& s) {
  std::vector<double> ks;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad k value '" + item + "' in --k-list");
    }
    if (used != item.size() || !(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("bad k value '" + item + "' in --k-list");
    }
    ks.push_back(v);
  }
  if (ks.empty()) throw std::invalid_argument("--k-list is empty");
  return ks;
}

int cmd_constants(const RunConfig& cfg, std::ostream& out) {
  const MapParams params(cfg.k);
  const CriticalConstants c = critical_constants(params);
  std::optional<StripSpec> strip;
  if (cfg.m) strip = delta_strip(*cfg.m, params);
  header(out, cfg);
  CsvWriter csv(out, {"name", "value", "defined"});
  const auto emit = [&](const char* name, const std::optional<double>& v) {
    csv.row({name, real_or_nan(v), CsvWriter::cell(v.has_value())});
  };
  emit("delta_minus", c.delta_minus);
  emit("delta_star", c.delta_star);
  emit("delta_plus", c.delta_plus);
  emit("delta_hat_T_minus", c.delta_hat_T_minus);
  emit("delta_hat_T_plus", c.delta_hat_T_plus);
  emit("delta_T_minus", c.delta_T_minus);
  emit("delta_T_plus", c.delta_T_plus);
  if (strip) {
    emit("delta_pos_m", strip->delta_pos_m);
    emit("delta_neg_m", strip->delta_neg_m);
  }
  return 0;
}

int cmd_field(const RunConfig& cfg, std::ostream& out) {
  const MapParams params(cfg.k);
  const bool forward = cfg.time == "forward";
  const Time time = forward ? Time::forward : Time::backward;
  header(out, cfg);
  CsvWriter csv(out, {"coord", forward ? "phi" : "phi_tilde", "theta", "e_x", "e_y", "f_x", "f_y"});
  for (int i = 0; i < cfg.grid; ++i) {
    const double c = static_cast<double>(i) / cfg.grid;
    const double ph = forward ? phi(c, params).value() : phi_tilde(c, params).value();
    const double th = theta_field(c, params, time).canonical;
    const Vec2 e = unit_vector(forward ? DirectionField::e1 : DirectionField::e_minus1, c, params);
    const Vec2 f = unit_vector(forward ? DirectionField::f1 : DirectionField::f_minus1, c, params);
    csv.row({CsvWriter::cell(c), CsvWriter::cell(ph), CsvWriter::cell(th), CsvWriter::cell(e.x),
             CsvWriter::cell(e.y), CsvWriter::cell(f.x), CsvWriter::cell(f.y)});
  }
  return 0;
}

int cmd_leaf(const RunConfig& cfg, std::ostream& out) {
  const MapParams params(cfg.k);
  const FieldId field = parse_field_id(cfg.field);
  TraceOptions opts;
  opts.adaptive = cfg.adaptive;
  const Leaf leaf = trace_leaf(field, TorusPoint(cfg.x, cfg.y), params, cfg.step, cfg.max_arc, opts);
  const auto segments = seam_segments(leaf);

  if (cfg.format == "svg") {
    std::ostringstream title;
    title << to_string(field) << " leaf, k=" << format_real(cfg.k);
    io::SvgDocument svg(800, title.str());
    if (params.all_defined()) {
      const CriticalConstants c = critical_constants(params);
      shade_pair(svg, c.delta_minus, c.delta_plus, "#f4a261");
    }
    for (const auto& seg : segments) svg.polyline(seg, "#1d3557", 1.2);
    svg.circle({TorusPoint(cfg.x, cfg.y).x(), TorusPoint(cfg.x, cfg.y).y()}, 0.006, "#e63946");
    svg.write(out);
    return 0;
  }

  header(out, cfg);
  out << "# closed=" << (leaf.closed ? "true" : "false")
      << " arc_length=" << format_real(leaf.arc_length)
      << " vertices=" << leaf.vertices.size() << '\n';
  CsvWriter csv(out, {"seg_id", "x", "y"});
  for (std::size_t s = 0; s < segments.size(); ++s) {
    for (const Vec2& v : segments[s]) {
      csv.row({std::to_string(s), CsvWriter::cell(v.x), CsvWriter::cell(v.y)});
    }
  }
  return 0;
}

int cmd_tangency(const RunConfig& cfg, std::ostream& out) {
  const MapParams params(cfg.k);
  const std::array<Landmark, 8> marks = tangency_landmarks(params);

  if (cfg.format == "svg") {
    const TangencyCurves curves = tangency_curve(params, static_cast<int>(cfg.samples));
    std::ostringstream title;
    title << "tangency curve in (ytilde, y), k=" << format_real(cfg.k);
    io::SvgDocument svg(800, title.str());
    const CriticalConstants c = critical_constants(params);
    shade_pair(svg, c.delta_hat_T_minus, c.delta_hat_T_plus, "#a8dadc");
    for (const auto* branch : {&curves.lower, &curves.upper}) {
      std::vector<Vec2> pts;
      pts.reserve(branch->size());
      for (const TangencyPoint& t : *branch) pts.push_back({t.ytilde, t.y});
      svg.polyline(pts, "#1d3557", 1.5);
    }
    for (const Landmark& lm : marks) {
      if (!lm.available) continue;
      const Vec2 at{lm.curve_point.ytilde, lm.curve_point.y};
      svg.circle(at, 0.006, "#e63946");
      svg.text({at.x + 0.01, at.y + 0.01}, lm.label);
    }
    svg.write(out);
    return 0;
  }

  header(out, cfg);
  if (cfg.landmarks) {
    CsvWriter csv(out, {"label", "available", "ytilde", "y", "residual", "curve_y", "curve_residual"});
    for (const Landmark& lm : marks) {
      csv.row({lm.label, CsvWriter::cell(lm.available), CsvWriter::cell(lm.point.ytilde),
               CsvWriter::cell(lm.point.y), CsvWriter::cell(lm.point.residual),
               CsvWriter::cell(lm.curve_point.y), CsvWriter::cell(lm.curve_point.residual)});
    }
    return 0;
  }
  const TangencyCurves curves = tangency_curve(params, static_cast<int>(cfg.samples));
  CsvWriter csv(out, {"ytilde", "y", "branch", "residual"});
  for (std::size_t i = 0; i < curves.lower.size(); ++i) {
    for (const TangencyPoint* t : {&curves.lower[i], &curves.upper[i]}) {
      csv.row({CsvWriter::cell(t->ytilde), CsvWriter::cell(t->y),
               t->branch == Branch::lower ? "lower" : "upper", CsvWriter::cell(t->residual)});
    }
  }
  return 0;
}

int cmd_cones(const RunConfig& cfg, std::ostream& out) {
  const MapParams params(cfg.k);
  const ConeReport rep =
      verify_cones(params, *cfg.m, cfg.samples, cfg.seed,
                   cfg.inside_strip ? SampleRegion::inside_strip : SampleRegion::outside_strip);
  const StripSpec strip = delta_strip(*cfg.m, params);

  const std::vector<std::pair<std::string, std::string>> rows{
      {"k", format_real(rep.k)},
      {"m", std::to_string(rep.m)},
      {"seed", std::to_string(rep.seed)},
      {"region", rep.inside_strip ? "inside" : "outside"},
      {"delta_pos_m", format_real(strip.delta_pos_m)},
      {"delta_neg_m", format_real(strip.delta_neg_m)},
      {"samples", std::to_string(rep.samples)},
      {"failures", std::to_string(rep.failures)},
      {"slope_failures", std::to_string(rep.slope_failures)},
      {"norm_failures", std::to_string(rep.norm_failures)},
      {"min_norm", format_real(rep.min_norm)},
      {"slope_min", format_real(rep.slope_min)},
      {"slope_max", format_real(rep.slope_max)},
  };
  if (cfg.format == "txt") {
    for (const auto& [key, value] : rows) out << std::left << std::setw(16) << key << value << '\n';
  } else {
    header(out, cfg);
    CsvWriter csv(out, {"key", "value"});
    for (const auto& [key, value] : rows) csv.row({key, value});
  }

  if (!cfg.failures_out.empty()) {
    std::ofstream file(cfg.failures_out, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open '" + cfg.failures_out + "' for writing");
    header(file, cfg);
    CsvWriter csv(file, {"y", "theta", "slope", "norm"});
    for (const ConeFailure& f : rep.failure_list) {
      csv.row({CsvWriter::cell(f.y), CsvWriter::cell(f.theta), CsvWriter::cell(f.slope),
               CsvWriter::cell(f.norm)});
    }
  }
  return rep.failures > 0 ? 1 : 0;
}

}  // namespace hypermap::cli
