#pragma once

#include "parproj/parabola2d.hpp"

namespace parproj {

/// Vertex, focus, directrix and the frontier ordinate y0 above which points
/// on the axis of symmetry have two nearest points (below, for alpha < 0).
struct AxisGeometry {
  double x0 = 0.0;
  double vertex_y = 0.0;
  Point2 focus;
  double directrix_y = 0.0;
  double y0 = 0.0;
  double curvature_radius = 0.0;
};

AxisGeometry analyze(const Quadratic& s) noexcept;

/// y0 from its closed form and as the vertex reflected across the focus.
struct ReflectionIdentity {
  double y0_direct = 0.0;
  double y0_reflected = 0.0;
};

ReflectionIdentity check_reflection_identity(const Quadratic& s) noexcept;

/// Projection of (x0, ybar). Branches on the sign of p, so it is valid for
/// either sign of alpha.
Projection2 axis_projection(const Quadratic& s, double ybar, const Tolerance& tol = {});

} // namespace parproj
