// First-order hyperbolic coordinates of the standard map.
//
// Forward time: the most contracted direction of Df depends on y only and
// satisfies tan 2t = phi(y) with phi = -P1'(psi_c) / P1(psi_c).
// Backward time: the most contracted direction of Df^-1 depends on the
// diagonal coordinate y~ only, with tan 2t = phi~(y~) = -2 P2 / P2'.
//
// P1(x) = 2x^2 + 2x - 1, P2(x) = x^2 + x + 1, psi_c(y) = 2 pi k cos(2 pi y).
#pragma once

#include <optional>

#include "hypermap/angles.hpp"
#include "hypermap/map.hpp"

namespace hypermap {

enum class PsiKind { cos, sin };
/// Names the coordinate the argument of `psi` is measured in. Purely
/// descriptive: the formula is the same in both frames.
enum class Frame { standard, diagonal };

/// 2 pi k cos(2 pi y) or 2 pi k sin(2 pi y).
double psi(double y, const MapParams& params, PsiKind kind = PsiKind::cos,
           Frame frame = Frame::standard) noexcept;

/// d psi_c / dy = -(2 pi)^2 k sin(2 pi y).
double psi_cos_prime(double y, const MapParams& params) noexcept;

inline double poly_p1(double x) noexcept { return 2.0 * x * x + 2.0 * x - 1.0; }
inline double poly_p1_prime(double x) noexcept { return 4.0 * x + 2.0; }
inline double poly_p2(double x) noexcept { return x * x + x + 1.0; }
inline double poly_p2_prime(double x) noexcept { return 2.0 * x + 1.0; }

/// A ratio num/den that may be infinite. `infinite` is set when the
/// denominator vanishes within its floating-point uncertainty.
struct ExtendedReal {
  double num = 0.0;
  double den = 1.0;
  bool infinite = false;

  /// num/den, or a signed infinity when `infinite`.
  double value() const noexcept;
};

/// phi(y) = -(4 psi_c + 2) / (2 psi_c^2 + 2 psi_c - 1).
ExtendedReal phi(double y, const MapParams& params) noexcept;

/// phi~(y~) = -2 (psi~^2 + psi~ + 1) / (1 + 2 psi~).
ExtendedReal phi_tilde(double ytilde, const MapParams& params) noexcept;

/// phi'(y) = 8 P2(psi_c) / P1(psi_c)^2 * psi_c'.
double phi_prime(double y, const MapParams& params) noexcept;

/// phi~'(y~) = -2 P1(psi~) / P2'(psi~)^2 * psi~', with psi~' = -(2 pi)^2 k sin(2 pi y~).
double phi_tilde_prime(double ytilde, const MapParams& params) noexcept;

/// Most contracted direction e^(1)(y) (forward) or e^(-1)(y~) (backward).
///
/// Computed as half the two-argument arctangent of the phi / phi~ pair, so
/// the field is continuous through the asymptotes. Forward values lie in
/// (0, pi); backward values in (0, pi/2).
DirAngle theta_field(double coord, const MapParams& params, Time time) noexcept;

enum class DirectionField { e1, f1, e_minus1, f_minus1 };

/// Unit vector of the named field; `coord` is y for e1/f1 and y~ for
/// e_minus1/f_minus1. f-fields are the e-fields rotated by +pi/2.
Vec2 unit_vector(DirectionField field, double coord, const MapParams& params) noexcept;

/// Hyperbolic coordinates of order n at a point.
struct HypFrame {
  int order = 1;
  double F = 1.0;  // largest singular value of Df^n
  double E = 1.0;  // smallest singular value
  double H = 1.0;  // E / F
  DirAngle e_dir;  // most contracted
  DirAngle f_dir;  // most expanded
};

/// SVD of the order-n orbit Jacobian. E is taken as 1/F because Df^n is
/// unimodular; for long orbits the determinant of the computed product is
/// dominated by cancellation error. Throws ConformalPointError if E == F.
HypFrame hyperbolic_frame(const TorusPoint& p, const MapParams& params, int n,
                          int cap = kDefaultOrbitCap);

/// The delta family. Unset optionals mean the constant does not exist at k.
struct CriticalConstants {
  std::optional<double> delta_minus;
  std::optional<double> delta_star;
  std::optional<double> delta_plus;
  std::optional<double> delta_hat_T_minus;
  std::optional<double> delta_hat_T_plus;
  std::optional<double> delta_T_minus;
  std::optional<double> delta_T_plus;

  bool all_defined() const noexcept;

  /// delta- < 1/4 < delta* < d^T- < dT- < delta+ < dT+ < d^T+.
  bool ordered() const noexcept;
};

CriticalConstants critical_constants(const MapParams& params);

/// Reads a constant, throwing ParameterError naming it when undefined.
double require(const std::optional<double>& c, const char* name);

}  // namespace hypermap
