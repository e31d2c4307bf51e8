// The critical set of first-order tangencies, where the forward and
// backward most-contracted directions coincide.
//
// In the diagonal/horizontal coordinates (y~, y) the set is the graph of the
// two-valued selector y = Gamma(y~): solutions of phi(y) = phi~(y~)
// restricted to the strips where the two piecewise angle formulas agree.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hypermap/coordinates.hpp"

namespace hypermap {

/// One preimage of phi. `branch` is the sign in front of the square root of
/// the closed-form inverse; `mirror` marks the 1 - y partner.
struct PhiPreimage {
  double y = 0.0;
  int branch = +1;
  bool mirror = false;
};

/// All y in [0, 1) with phi(y) = z (0 to 4 values), from
///   psi_c = (-(z + 2) +- sqrt(3 z^2 + 4)) / (2 z),  y = acos(psi_c / 2 pi k) / 2 pi
/// evaluated with the cancellation-free form of the quadratic roots, then
/// polished by bisection. Throws std::invalid_argument for z == 0; the zero
/// set of phi is {delta*, 1 - delta*}.
std::vector<PhiPreimage> phi_inverse(double z, const MapParams& params);

/// The unique preimage of z inside [lo, hi], refined by bisection to 1e-13.
/// Empty if none (or more than one) lies in the interval.
std::optional<double> phi_inverse_in(double z, const MapParams& params, double lo, double hi);

/// The two y values of the tangency selector at y~, in increasing order.
/// At y~ = delta*, 1 - delta* (asymptotes of phi~) returns {delta+, 1 - delta+}.
/// Throws ConsistencyError if the region intersection does not yield exactly
/// two values, and ParameterError if a required constant is undefined.
std::array<double, 2> gamma(double ytilde, const MapParams& params);

enum class Branch { lower, upper };

struct TangencyPoint {
  double ytilde = 0.0;
  double y = 0.0;
  Branch branch = Branch::lower;
  /// Angle between e^(1)(y) and e^(-1)(y~), radians.
  double residual = 0.0;

  /// Torus point (x, y) with x = y - y~ mod 1.
  TorusPoint torus() const noexcept { return {y - ytilde, y}; }
};

/// Angle between the forward and backward contracting fields at (y~, y).
double tangency_residual(double ytilde, double y, const MapParams& params) noexcept;

struct TangencyCurves {
  std::vector<TangencyPoint> lower;
  std::vector<TangencyPoint> upper;
};

/// Samples y~ = i / n_samples (i = 0 .. n_samples - 1) and assigns the two
/// Gamma values to branches by continuity. Throws std::invalid_argument for
/// n_samples < 16 and ConsistencyError if a branch jumps by 10 / n_samples.
TangencyCurves tangency_curve(const MapParams& params, int n_samples);

struct Landmark {
  std::string label;  // "P1" .. "P8"
  bool available = false;
  /// Tabulated position, with the residual evaluated there.
  TangencyPoint point;
  /// The Gamma value at the same y~ nearest to the tabulated y. Differs from
  /// `point` for P2, P4, P6, P8, whose tabulated heights solve
  /// phi(y) = -+ sqrt 3 / 2 while phi~ at y~ = delta-+ equals -+ sqrt 3.
  TangencyPoint curve_point;
};

/// The eight tabulated tangency points P1..P8 in (y~, y) coordinates.
std::array<Landmark, 8> tangency_landmarks(const MapParams& params);

struct NoTangencyReport {
  int grid = 0;
  double min_residual = 0.0;
  TorusPoint argmin;
};

/// Minimum angle between e^(1) and e^(-1) over a grid x grid sample of
/// {y in [0, delta-] u [1 - delta-, 1)}: grid values of x = i / grid and
/// grid values of y, half in each band including the band edges.
NoTangencyReport no_tangency_scan(const MapParams& params, int grid);

}  // namespace hypermap
