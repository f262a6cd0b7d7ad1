#include "parproj/axis_geometry.hpp"

#include <cassert>
#include <cmath>

#include "parproj/error.hpp"

namespace parproj {

AxisGeometry analyze(const Quadratic& s) noexcept {
  const double a = s.alpha();
  const double b = s.beta();
  const double g = s.gamma();

  AxisGeometry geo;
  geo.x0 = s.axis();
  geo.vertex_y = g - b * b / (4.0 * a);
  geo.focus = {geo.x0, geo.vertex_y + 1.0 / (4.0 * a)};
  geo.directrix_y = geo.vertex_y - 1.0 / (4.0 * a);
  geo.y0 = (4.0 * a * g - b * b + 2.0) / (4.0 * a);
  geo.curvature_radius = 1.0 / (2.0 * std::abs(a));
  return geo;
}

ReflectionIdentity check_reflection_identity(const Quadratic& s) noexcept {
  const AxisGeometry geo = analyze(s);
  return {geo.y0, 2.0 * geo.focus.y - geo.vertex_y};
}

Projection2 axis_projection(const Quadratic& s, double ybar, const Tolerance& tol) {
  if (!std::isfinite(ybar))
    throw Error(ErrorCode::InvalidArgument, "ybar must be finite");

  const QueryPoint2 pt{s.axis(), ybar};
  Projection2 proj = project_corollary(s, pt, tol);

  // p >= 0 on the axis must give the vertex, p < 0 the symmetric pair.
  const CaseData cd = snapped_case_data(s, pt, tol);
  assert(cd.q == 0.0);
  assert(std::holds_alternative<SinglePoint2>(proj) == (cd.p >= 0.0));
  (void)cd;
  return proj;
}

} // namespace parproj
