#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "parproj/cubic.hpp"
#include "parproj/quartic.hpp"
#include "parproj/tolerance.hpp"

namespace parproj {

/// s(x) = alpha x^2 + beta x + gamma with alpha != 0.
class Quadratic {
public:
  /// Throws Error(DegenerateQuadratic) for alpha == 0 and
  /// Error(InvalidArgument) for non-finite coefficients.
  Quadratic(double alpha, double beta, double gamma);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double gamma() const noexcept { return gamma_; }

  /// Abscissa of the vertex, -beta / (2 alpha).
  double axis() const noexcept { return -beta_ / (2.0 * alpha_); }
  double slope(double x) const noexcept { return 2.0 * alpha_ * x + beta_; }

  Quadratic negated() const { return {-alpha_, -beta_, -gamma_}; }

private:
  double alpha_;
  double beta_;
  double gamma_;
};

double evaluate(const Quadratic& s, double x) noexcept;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

using QueryPoint2 = Point2;

/// Depressed-cubic data of Q' for a query point, plus the folded angle used
/// on the trigonometric branch.
struct CaseData {
  double p = 0.0;
  double q = 0.0;
  double delta = 0.0;
  double x0 = 0.0;
  std::optional<double> theta_abs; // only when delta < 0 and q != 0
};

struct SinglePoint2 {
  Point2 point;
};

/// Two equidistant nearest points mirrored about the axis, left.x < right.x.
struct PointPair2 {
  Point2 left;
  Point2 right;
};

using Projection2 = std::variant<SinglePoint2, PointPair2>;

enum class Region {
  NonnegativeDelta = 0,
  AxisMultiValued = 1,
  TrigSingle = 2,
};

std::string_view to_string(Region region) noexcept;

/// Squared distance from pt to (x, s(x)) as a quartic in x.
Quartic distance_quartic(const Quadratic& s, QueryPoint2 pt) noexcept;

/// Q'(x) written out directly from the parabola and the query point.
Cubic stationarity_cubic(const Quadratic& s, QueryPoint2 pt) noexcept;

/// Raw p, q and delta from the simplified closed forms, no snapping applied.
CaseData case_data(const Quadratic& s, QueryPoint2 pt) noexcept;

/// As case_data, then q is zeroed on the axis and delta snapped to zero
/// inside the tolerance band. Every projection routine branches on this.
CaseData snapped_case_data(const Quadratic& s, QueryPoint2 pt, const Tolerance& tol) noexcept;

/// Five-way case split (Cardano, simple root of a double-root cubic, axis
/// pair, and the two trigonometric roots).
Projection2 project_theorem(const Quadratic& s, QueryPoint2 pt, const Tolerance& tol = {});

/// Three-way case split folding the trigonometric roots through |q|.
Projection2 project_corollary(const Quadratic& s, QueryPoint2 pt, const Tolerance& tol = {});

Region classify_region(const Quadratic& s, QueryPoint2 pt, const Tolerance& tol = {});

/// Euclidean distance from pt to the (first) returned projection point.
double projection_distance(const Projection2& proj, QueryPoint2 pt) noexcept;

} // namespace parproj
