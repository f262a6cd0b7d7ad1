#include "parproj/paraboloid_nd.hpp"

#include <algorithm>
#include <cmath>

#include "parproj/cubic.hpp"
#include "parproj/error.hpp"

namespace parproj {

namespace {

double euclidean_norm(std::span<const double> x) noexcept {
  double big = 0.0;
  for (double v : x)
    big = std::max(big, std::abs(v));
  if (big == 0.0)
    return 0.0;
  double sum = 0.0;
  for (double v : x) {
    const double r = v / big;
    sum += r * r;
  }
  return big * std::sqrt(sum);
}

void validate(const Paraboloid& P, const QueryPointN& pt) {
  if (pt.x.size() != P.dim())
    throw Error(ErrorCode::DimensionMismatch, "query dimension does not match the paraboloid");
  if (!std::isfinite(pt.y) ||
      !std::all_of(pt.x.begin(), pt.x.end(), [](double v) { return std::isfinite(v); }))
    throw Error(ErrorCode::InvalidArgument, "query point must have finite coordinates");
}

bool on_axis(double norm, double y, const Tolerance& tol) noexcept {
  return norm <= tol.norm * machine_eps * std::max(1.0, std::abs(y));
}

} // namespace

Paraboloid::Paraboloid(double alpha, std::size_t dim) : alpha_(alpha), dim_(dim) {
  if (!(std::isfinite(alpha) && alpha > 0.0))
    throw Error(ErrorCode::InvalidModel, "paraboloid requires a finite alpha > 0");
  if (dim == 0)
    throw Error(ErrorCode::InvalidArgument, "paraboloid dimension must be positive");
}

double Paraboloid::height(std::span<const double> x) const noexcept {
  const double r = euclidean_norm(x);
  return alpha_ * r * r;
}

double delta_nd(const Paraboloid& P, const QueryPointN& pt) {
  validate(P, pt);
  const double a = P.alpha();
  const double lift = 1.0 - 2.0 * a * pt.y;
  const double norm = euclidean_norm(pt.x);
  const double a2 = a * a;
  return lift * lift * lift / (216.0 * a2 * a2 * a2) + norm * norm / (16.0 * a2 * a2);
}

ProjectionN project_nd(const Paraboloid& P, const QueryPointN& pt, const Tolerance& tol) {
  validate(P, pt);
  const double a = P.alpha();
  const double norm = euclidean_norm(pt.x);

  // Depressed form of the radial problem: mu^3 + p mu + q with q = -||x̄|| / (2 alpha^2).
  const double p = (1.0 - 2.0 * a * pt.y) / (2.0 * a * a);

  if (on_axis(norm, pt.y, tol)) {
    if (p >= 0.0)
      return PointN{std::vector<double>(P.dim(), 0.0), 0.0};
    const double radius = std::sqrt(pt.y / a - 1.0 / (2.0 * a * a));
    return Sphere{radius, a * radius * radius};
  }

  const double q = -norm / (2.0 * a * a);
  const double delta = snap_discriminant(p, q, delta_nd(P, pt), tol);

  double mu = 0.0;
  if (delta >= 0.0) {
    mu = cardano_root(p, q, delta);
  } else {
    const double lift = 2.0 * a * pt.y - 1.0;
    const double arg = 1.5 * std::sqrt(6.0) * a * norm / (lift * std::sqrt(lift));
    const double angle = std::acos(std::min(arg, 1.0));
    mu = 2.0 * std::sqrt(lift / (6.0 * a * a)) * std::cos(angle / 3.0);
  }

  PointN out;
  out.w.resize(P.dim());
  const double scale = mu / norm;
  std::transform(pt.x.begin(), pt.x.end(), out.w.begin(), [scale](double v) { return v * scale; });
  out.y = P.height(out.w);
  return out;
}

std::pair<Quadratic, QueryPoint2> reduce_to_2d(const Paraboloid& P, const QueryPointN& pt,
                                               const Tolerance& tol) {
  validate(P, pt);
  const double norm = euclidean_norm(pt.x);
  if (on_axis(norm, pt.y, tol))
    throw Error(ErrorCode::ZeroDirection, "query lies on the paraboloid axis");
  return {Quadratic(P.alpha(), 0.0, 0.0), QueryPoint2{norm, pt.y}};
}

PointN sphere_point(const Paraboloid& P, const Sphere& sphere, std::span<const double> direction) {
  if (direction.size() != P.dim())
    throw Error(ErrorCode::DimensionMismatch, "direction dimension does not match the paraboloid");
  const double norm = euclidean_norm(direction);
  if (!(norm > 0.0) || !std::isfinite(norm))
    throw Error(ErrorCode::ZeroDirection, "sphere direction must be a nonzero finite vector");

  PointN out;
  out.w.resize(direction.size());
  const double scale = sphere.radius / norm;
  std::transform(direction.begin(), direction.end(), out.w.begin(),
                 [scale](double v) { return v * scale; });
  out.y = sphere.height;
  return out;
}

} // namespace parproj
