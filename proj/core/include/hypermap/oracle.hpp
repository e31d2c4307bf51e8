// Brute-force ground truth for 2x2 linear maps. Nothing in the production
// formulas for the direction fields depends on this header; it exists so
// that every closed form has an independent check.
#pragma once

#include <functional>

#include "hypermap/angles.hpp"
#include "hypermap/map.hpp"

namespace hypermap::oracle {

struct Svd2Result {
  double sigma_max = 0.0;
  double sigma_min = 0.0;
  /// Right-singular directions; meaningless when `degenerate` is set.
  DirAngle dir_max;
  DirAngle dir_min;
  bool degenerate = false;
};

/// Singular values from the eigenvalues of M^T M; directions from the
/// rotation that diagonalizes M^T M. Entries are rescaled internally so
/// products with very large entries do not overflow when squared.
Svd2Result svd2(const Mat2& m);

/// Minimizer of |M (cos t, sin t)| over t in [0, pi), found by exhaustive
/// grid search followed by sign bisection on the derivative. `degenerate`
/// is set (and the angle is meaningless) when M is conformal.
struct SweepResult {
  DirAngle dir_min;
  bool degenerate = false;
};
SweepResult sweep_min_direction(const Mat2& m, int grid = 4096);

/// Central difference (fn(y + h) - fn(y - h)) / 2h.
double fd_derivative(const std::function<double(double)>& fn, double y, double h);

}  // namespace hypermap::oracle
