#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "parproj/parabola2d.hpp"
#include "parproj/tolerance.hpp"

namespace parproj {

/// Graph of x -> alpha ||x||^2 over R^n, alpha > 0.
class Paraboloid {
public:
  /// Throws Error(InvalidModel) unless alpha > 0 and finite, and
  /// Error(InvalidArgument) for dim == 0.
  Paraboloid(double alpha, std::size_t dim);

  double alpha() const noexcept { return alpha_; }
  std::size_t dim() const noexcept { return dim_; }

  double height(std::span<const double> x) const noexcept;

private:
  double alpha_;
  std::size_t dim_;
};

struct QueryPointN {
  std::vector<double> x;
  double y = 0.0;
};

struct PointN {
  std::vector<double> w;
  double y = 0.0;
};

/// Every (w, alpha r^2) with ||w|| = r; height is alpha r^2.
struct Sphere {
  double radius = 0.0;
  double height = 0.0;
};

using ProjectionN = std::variant<PointN, Sphere>;

double delta_nd(const Paraboloid& P, const QueryPointN& pt);

ProjectionN project_nd(const Paraboloid& P, const QueryPointN& pt, const Tolerance& tol = {});

/// The planar problem along the ray through x̄: project (||x̄||, ȳ) onto alpha x^2.
///
/// Throws Error(ZeroDirection) when ||x̄|| is inside the zero-snap band.
std::pair<Quadratic, QueryPoint2> reduce_to_2d(const Paraboloid& P, const QueryPointN& pt,
                                               const Tolerance& tol = {});

/// A point of the sphere of minimizers along `direction` (normalized here).
/// Throws Error(ZeroDirection) for a zero direction.
PointN sphere_point(const Paraboloid& P, const Sphere& sphere, std::span<const double> direction);

} // namespace parproj
