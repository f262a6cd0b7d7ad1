#include "parproj/parabola2d.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "parproj/error.hpp"

namespace parproj {

namespace {

void require_finite(QueryPoint2 pt) {
  if (!(std::isfinite(pt.x) && std::isfinite(pt.y)))
    throw Error(ErrorCode::InvalidArgument, "query point must have finite coordinates");
}

Point2 on_graph(const Quadratic& s, double x) noexcept { return {x, evaluate(s, x)}; }

Projection2 axis_pair(const Quadratic& s, const CaseData& cd) {
  const double half_width = std::sqrt(-cd.p);
  return PointPair2{on_graph(s, cd.x0 - half_width), on_graph(s, cd.x0 + half_width)};
}

} // namespace

Quadratic::Quadratic(double alpha, double beta, double gamma)
    : alpha_(alpha), beta_(beta), gamma_(gamma) {
  if (!(std::isfinite(alpha) && std::isfinite(beta) && std::isfinite(gamma)))
    throw Error(ErrorCode::InvalidArgument, "quadratic coefficients must be finite");
  if (alpha == 0.0)
    throw Error(ErrorCode::DegenerateQuadratic, "alpha must be nonzero");
}

double evaluate(const Quadratic& s, double x) noexcept {
  return (s.alpha() * x + s.beta()) * x + s.gamma();
}

std::string_view to_string(Region region) noexcept {
  switch (region) {
  case Region::NonnegativeDelta: return "nonnegative_delta";
  case Region::AxisMultiValued: return "axis_multi_valued";
  case Region::TrigSingle: return "trig_single";
  }
  return "unknown";
}

Quartic distance_quartic(const Quadratic& s, QueryPoint2 pt) noexcept {
  const double a = s.alpha();
  const double b = s.beta();
  const double shift = s.gamma() - pt.y;
  return {a * a, 2.0 * a * b, 1.0 + b * b + 2.0 * a * shift, 2.0 * (b * shift - pt.x),
          shift * shift + pt.x * pt.x};
}

Cubic stationarity_cubic(const Quadratic& s, QueryPoint2 pt) noexcept {
  const double a = s.alpha();
  const double b = s.beta();
  const double g = s.gamma();
  return {4.0 * a * a, 6.0 * a * b, 2.0 * b * b - 4.0 * a * pt.y + 4.0 * a * g + 2.0,
          -2.0 * b * pt.y + 2.0 * b * g - 2.0 * pt.x};
}

CaseData case_data(const Quadratic& s, QueryPoint2 pt) noexcept {
  const double a = s.alpha();
  const double b = s.beta();
  CaseData cd;
  cd.x0 = s.axis();
  cd.p = -(b * b + 4.0 * a * pt.y - 4.0 * a * s.gamma() - 2.0) / (4.0 * a * a);
  cd.q = -(2.0 * a * pt.x + b) / (4.0 * a * a * a);
  cd.delta = DepressedCubic::discriminant(cd.p, cd.q);
  if (cd.delta < 0.0 && cd.q != 0.0) {
    const double m = -cd.p / 3.0;
    cd.theta_abs = std::acos(std::min(std::abs(cd.q / 2.0) / (m * std::sqrt(m)), 1.0));
  }
  return cd;
}

CaseData snapped_case_data(const Quadratic& s, QueryPoint2 pt, const Tolerance& tol) noexcept {
  CaseData cd = case_data(s, pt);
  const double offset = std::abs(pt.x - cd.x0);
  if (offset <= tol.q * machine_eps * std::max({1.0, std::abs(pt.x), std::abs(cd.x0)}))
    cd.q = 0.0;
  cd.delta = snap_discriminant(cd.p, cd.q, DepressedCubic::discriminant(cd.p, cd.q), tol);
  cd.theta_abs.reset();
  if (cd.delta < 0.0 && cd.q != 0.0) {
    const double m = -cd.p / 3.0;
    cd.theta_abs = std::acos(std::min(std::abs(cd.q / 2.0) / (m * std::sqrt(m)), 1.0));
  }
  return cd;
}

Projection2 project_theorem(const Quadratic& s, QueryPoint2 pt, const Tolerance& tol) {
  require_finite(pt);
  const CaseData cd = snapped_case_data(s, pt, tol);

  if (cd.p == 0.0 || cd.delta > 0.0)
    return SinglePoint2{on_graph(s, cd.x0 + cardano_root(cd.p, cd.q, cd.delta))};

  if (cd.delta == 0.0) {
    // Simple root of Q' = 4 alpha^2 (x - x_d)^2 (x - x_s); x_d is an inflection.
    const double a = s.alpha();
    const double b = s.beta();
    const double denom = (b * b + 4.0 * a * pt.y - 4.0 * a * s.gamma() - 2.0) * a;
    return SinglePoint2{on_graph(s, cd.x0 + 3.0 * (2.0 * a * pt.x + b) / denom)};
  }

  if (cd.q == 0.0)
    return axis_pair(s, cd);

  const double theta = trig_angle(cd.p, cd.q);
  const int k = cd.q < 0.0 ? 0 : 1;
  return SinglePoint2{on_graph(s, trig_root(cd.x0, cd.p, theta, k))};
}

Projection2 project_corollary(const Quadratic& s, QueryPoint2 pt, const Tolerance& tol) {
  require_finite(pt);
  const CaseData cd = snapped_case_data(s, pt, tol);

  if (cd.delta >= 0.0)
    return SinglePoint2{on_graph(s, cd.x0 + cardano_root(cd.p, cd.q, cd.delta))};

  if (cd.q == 0.0)
    return axis_pair(s, cd);

  assert(cd.theta_abs.has_value());
  const double sign_q = cd.q > 0.0 ? 1.0 : -1.0;
  const double x = cd.x0 - 2.0 * sign_q * std::sqrt(-cd.p / 3.0) * std::cos(*cd.theta_abs / 3.0);
  return SinglePoint2{on_graph(s, x)};
}

Region classify_region(const Quadratic& s, QueryPoint2 pt, const Tolerance& tol) {
  require_finite(pt);
  const CaseData cd = snapped_case_data(s, pt, tol);
  if (cd.delta >= 0.0)
    return Region::NonnegativeDelta;
  if (cd.q == 0.0)
    return Region::AxisMultiValued;
  return Region::TrigSingle;
}

double projection_distance(const Projection2& proj, QueryPoint2 pt) noexcept {
  const Point2 w = std::holds_alternative<SinglePoint2>(proj) ? std::get<SinglePoint2>(proj).point
                                                              : std::get<PointPair2>(proj).left;
  return std::hypot(pt.x - w.x, pt.y - w.y);
}

} // namespace parproj
