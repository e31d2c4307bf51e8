// Leaves of the four first-order direction fields, traced as polylines on
// the torus.
#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "hypermap/coordinates.hpp"

namespace hypermap {

enum class FieldId { E1, F1, E_minus1, F_minus1 };

std::string_view to_string(FieldId id) noexcept;
/// Parses "E1", "F1", "E-1", "F-1"; throws std::invalid_argument otherwise.
FieldId parse_field_id(std::string_view s);

/// Unit direction of the field at p (sign arbitrary).
Vec2 field_direction(FieldId id, const TorusPoint& p, const MapParams& params) noexcept;

struct Leaf {
  FieldId field = FieldId::E1;
  std::vector<TorusPoint> vertices;
  /// Unwrapped copy of `vertices` in the plane, for winding queries.
  std::vector<Vec2> lifted;
  double arc_length = 0.0;
  bool closed = false;
};

struct TraceOptions {
  /// Shrink the step near the critical lines (y or y~ in {1/4, 3/4}).
  bool adaptive = true;
  /// Orientation of the first tangent; when unset the representative with
  /// nonnegative x-component is used (ties: nonnegative y).
  std::optional<Vec2> initial_tangent;
  /// Declare the leaf closed when it returns to its start.
  bool detect_closure = true;
};

/// Fourth-order explicit integration of the unit direction field with
/// continuity lifting. Stops at `max_arc` or on closure. Throws
/// std::invalid_argument for nonpositive step/max_arc and StepSizeError when
/// the tangent turns by more than pi/4 within one step.
Leaf trace_leaf(FieldId field, const TorusPoint& start, const MapParams& params, double step,
                double max_arc, const TraceOptions& options = {});

/// Step multiplier min(1, max(k d, 1/k)) where d is the distance of the
/// field coordinate to the nearest of 1/4, 3/4.
double adaptive_step_factor(FieldId field, const TorusPoint& p, const MapParams& params) noexcept;

/// The closed leaves, as exact two-vertex lifted segments: horizontal lines
/// y = delta*, 1 - delta* for F1, diagonals y~ = delta*, 1 - delta* for E-1,
/// none for E1 and F-1.
std::vector<Leaf> closed_leaves(FieldId field, const MapParams& params);

/// Heights where e^(1) is vertical: the fold tips (delta*, 1 - delta*).
std::array<double, 2> fold_tips(const MapParams& params);

/// Polyline pieces of a leaf in the unit square, split where the leaf
/// crosses a torus seam; crossing points are interpolated onto the seam.
std::vector<std::vector<Vec2>> seam_segments(const Leaf& leaf);

}  // namespace hypermap
