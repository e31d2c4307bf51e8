#include "hypermap/foliations.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hypermap {

namespace {

constexpr double kMaxTurn = 0.25 * std::numbers::pi;

bool is_forward(FieldId id) noexcept { return id == FieldId::E1 || id == FieldId::F1; }

DirectionField as_direction_field(FieldId id) noexcept {
  switch (id) {
    case FieldId::E1: return DirectionField::e1;
    case FieldId::F1: return DirectionField::f1;
    case FieldId::E_minus1: return DirectionField::e_minus1;
    case FieldId::F_minus1: return DirectionField::f_minus1;
  }
  return DirectionField::e1;
}

Vec2 orient(Vec2 d, Vec2 ref) noexcept { return dot(d, ref) < 0.0 ? -d : d; }

Vec2 direction_lifted(FieldId id, Vec2 p, const MapParams& params) {
  return field_direction(id, TorusPoint(p.x, p.y), params);
}

// Nearest translate of `target` (by integer vectors) to `near`.
Vec2 nearest_translate(Vec2 target, Vec2 near) noexcept {
  return {near.x + circle_delta(target.x, near.x), near.y + circle_delta(target.y, near.y)};
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b, double* t_out) noexcept {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  if (t_out) *t_out = t;
  return norm(p - (a + t * ab));
}

[[noreturn]] void step_too_large(FieldId field, Vec2 p, double turn) {
  const TorusPoint z(p.x, p.y);
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "trace_leaf(%s): step too large, tangent turned %.3f rad near y=%.6f (ytilde=%.6f)",
                std::string(to_string(field)).c_str(), turn, z.y(), z.ytilde());
  throw StepSizeError(buf, z.y());
}

}  // namespace

std::string_view to_string(FieldId id) noexcept {
  switch (id) {
    case FieldId::E1: return "E1";
    case FieldId::F1: return "F1";
    case FieldId::E_minus1: return "E-1";
    case FieldId::F_minus1: return "F-1";
  }
  return "?";
}

FieldId parse_field_id(std::string_view s) {
  if (s == "E1") return FieldId::E1;
  if (s == "F1") return FieldId::F1;
  if (s == "E-1") return FieldId::E_minus1;
  if (s == "F-1") return FieldId::F_minus1;
  throw std::invalid_argument("unknown field id '" + std::string(s) + "' (expected E1|F1|E-1|F-1)");
}

Vec2 field_direction(FieldId id, const TorusPoint& p, const MapParams& params) noexcept {
  const double coord = is_forward(id) ? p.y() : p.ytilde();
  return unit_vector(as_direction_field(id), coord, params);
}

double adaptive_step_factor(FieldId field, const TorusPoint& p, const MapParams& params) noexcept {
  const double c = is_forward(field) ? p.y() : p.ytilde();
  const double d = std::min(std::abs(c - 0.25), std::abs(c - 0.75));
  const double k = params.k();
  return std::min(1.0, std::max(k * d, 1.0 / k));
}

Leaf trace_leaf(FieldId field, const TorusPoint& start, const MapParams& params, double step,
                double max_arc, const TraceOptions& options) {
  if (!(step > 0.0)) throw std::invalid_argument("trace_leaf: step must be positive");
  if (!(max_arc > 0.0)) throw std::invalid_argument("trace_leaf: max_arc must be positive");

  Leaf leaf;
  leaf.field = field;
  Vec2 p{start.x(), start.y()};
  Vec2 tangent = field_direction(field, start, params);
  if (options.initial_tangent) {
    tangent = orient(tangent, *options.initial_tangent);
  } else if (tangent.x < 0.0 || (tangent.x == 0.0 && tangent.y < 0.0)) {
    tangent = -tangent;
  }
  const Vec2 initial_tangent = tangent;

  const auto estimate = static_cast<std::size_t>(std::min(max_arc / step, 4.0e6));
  leaf.vertices.reserve(estimate + 2);
  leaf.lifted.reserve(estimate + 2);
  leaf.vertices.push_back(start);
  leaf.lifted.push_back(p);

  const Vec2 start_lifted = p;
  bool left_start = false;
  double arc = 0.0;
  while (arc < max_arc) {
    const TorusPoint here(p.x, p.y);
    double h = step * (options.adaptive ? adaptive_step_factor(field, here, params) : 1.0);
    if (arc + h > max_arc) h = max_arc - arc;
    if (h <= 0.0) break;

    const Vec2 k1 = orient(direction_lifted(field, p, params), tangent);
    const Vec2 k2 = orient(direction_lifted(field, p + 0.5 * h * k1, params), tangent);
    const Vec2 k3 = orient(direction_lifted(field, p + 0.5 * h * k2, params), tangent);
    const Vec2 k4 = orient(direction_lifted(field, p + h * k3, params), tangent);
    const Vec2 next = p + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    const Vec2 next_tangent = orient(direction_lifted(field, next, params), tangent);

    for (const Vec2& kv : {k1, k2, k3, k4, next_tangent}) {
      const double turn = std::acos(std::clamp(dot(kv, tangent), -1.0, 1.0));
      if (turn > kMaxTurn) step_too_large(field, p, turn);
    }

    if (options.detect_closure && left_start && dot(next_tangent, initial_tangent) > 0.99) {
      const Vec2 target = nearest_translate(start_lifted, p);
      double t = 0.0;
      if (point_segment_distance(target, p, next, &t) < 0.5 * step) {
        arc += norm(target - p);
        leaf.vertices.push_back(start);
        leaf.lifted.push_back(target);
        leaf.closed = true;
        break;
      }
    }

    p = next;
    tangent = next_tangent;
    arc += h;
    const TorusPoint z(p.x, p.y);
    leaf.vertices.push_back(z);
    leaf.lifted.push_back(p);
    if (!left_start && torus_distance(z, start) > step) left_start = true;
  }
  leaf.arc_length = arc;
  return leaf;
}

std::vector<Leaf> closed_leaves(FieldId field, const MapParams& params) {
  std::vector<Leaf> out;
  if (field == FieldId::E1 || field == FieldId::F_minus1) return out;
  const double ds = require(critical_constants(params).delta_star, "delta*");
  for (const double c : {ds, 1.0 - ds}) {
    Leaf leaf;
    leaf.field = field;
    leaf.closed = true;
    if (field == FieldId::F1) {
      leaf.lifted = {{0.0, c}, {1.0, c}};
      leaf.arc_length = 1.0;
    } else {
      leaf.lifted = {{0.0, c}, {1.0, 1.0 + c}};
      leaf.arc_length = std::numbers::sqrt2;
    }
    for (const Vec2& v : leaf.lifted) leaf.vertices.emplace_back(v.x, v.y);
    out.push_back(std::move(leaf));
  }
  return out;
}

std::array<double, 2> fold_tips(const MapParams& params) {
  const double ds = require(critical_constants(params).delta_star, "delta*");
  return {ds, 1.0 - ds};
}

std::vector<std::vector<Vec2>> seam_segments(const Leaf& leaf) {
  std::vector<std::vector<Vec2>> out;
  const auto& pts = leaf.lifted;
  if (pts.size() < 2) return out;

  std::vector<Vec2> current;
  double cell_x = 0.0, cell_y = 0.0;
  bool have_cell = false;
  std::vector<double> cuts;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Vec2 a = pts[i];
    const Vec2 b = pts[i + 1];
    cuts.assign({0.0, 1.0});
    for (int axis = 0; axis < 2; ++axis) {
      const double va = axis == 0 ? a.x : a.y;
      const double vb = axis == 0 ? b.x : b.y;
      if (va == vb) continue;
      const double lo = std::min(va, vb), hi = std::max(va, vb);
      for (double n = std::floor(lo) + 1.0; n < hi; n += 1.0) cuts.push_back((n - va) / (vb - va));
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      const double t0 = cuts[c], t1 = cuts[c + 1];
      if (t1 <= t0) continue;
      const Vec2 mid = a + (0.5 * (t0 + t1)) * (b - a);
      const double cx = std::floor(mid.x), cy = std::floor(mid.y);
      if (!have_cell || cx != cell_x || cy != cell_y) {
        if (current.size() >= 2) out.push_back(std::move(current));
        current.clear();
        cell_x = cx;
        cell_y = cy;
        have_cell = true;
        const Vec2 s = a + t0 * (b - a);
        current.push_back({s.x - cx, s.y - cy});
      }
      const Vec2 e = a + t1 * (b - a);
      current.push_back({e.x - cx, e.y - cy});
    }
  }
  if (current.size() >= 2) out.push_back(std::move(current));
  return out;
}

}  // namespace hypermap
