#pragma once

#include <limits>

namespace parproj {

inline constexpr double machine_eps = std::numeric_limits<double>::epsilon();

/// Snapping and acceptance thresholds shared by every solver.
///
/// `delta`, `q` and `norm` are multiples of machine epsilon applied to a
/// scale derived from the inputs; `tie` and `residual` are plain relative
/// factors.
struct Tolerance {
  double delta = 64.0;      // |Δ| band treated as Δ = 0
  double q = 64.0;          // distance to the symmetry axis treated as zero
  double norm = 64.0;       // ‖x̄‖ treated as zero in n dimensions
  double tie = 1e-10;       // |2 r2 - r1 - r3| treated as an exact tie
  double residual = 1e-10;  // accepted |f(r)| relative to the coefficient scale
};

} // namespace parproj
