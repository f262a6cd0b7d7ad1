#pragma once

#include <variant>

#include "parproj/tolerance.hpp"

namespace parproj {

/// a x^3 + b x^2 + c x + d with a != 0.
struct Cubic {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  double operator()(double x) const noexcept { return ((a * x + b) * x + c) * x + d; }

  /// max |coefficient| * (1 + |x|)^3, the yardstick for root residuals.
  double residual_scale(double x) const noexcept;
};

/// z^3 + p z + q, obtained from a cubic by the shift x = z + x0.
struct DepressedCubic {
  double x0 = 0.0;
  double p = 0.0;
  double q = 0.0;

  double delta() const noexcept { return discriminant(p, q); }
  double operator()(double z) const noexcept { return (z * z + p) * z + q; }

  static double discriminant(double p, double q) noexcept {
    const double third = p / 3.0;
    const double half = q / 2.0;
    return third * third * third + half * half;
  }
};

struct OneReal {
  double r = 0.0;
};

struct SimpleDouble {
  double simple = 0.0;
  double double_root = 0.0;
};

/// Three simple roots, r1 < r2 < r0, with the angle that generated them.
struct ThreeReal {
  double r1 = 0.0;
  double r2 = 0.0;
  double r0 = 0.0;
  double theta = 0.0;
};

using CubicRoots = std::variant<OneReal, SimpleDouble, ThreeReal>;

/// Number of distinct real roots carried by a CubicRoots value.
int distinct_root_count(const CubicRoots& roots) noexcept;

/// Throws Error(DegenerateCubic) when a == 0 or any coefficient is not finite.
DepressedCubic depress(const Cubic& f);

CubicRoots solve_cubic(const Cubic& f, const Tolerance& tol = {});

/// Returns 0 when |delta| lies inside the snap band around zero, else delta.
///
/// The band is tol.delta * eps * max((|p|/3)^3, (q/2)^2), i.e. relative to the
/// two terms whose difference forms the discriminant.
double snap_discriminant(double p, double q, double delta, const Tolerance& tol) noexcept;

/// The unique real root of z^3 + p z + q when delta >= 0.
///
/// Avoids the cancellation of the textbook two-cube-root sum: the larger
/// cube-root term is formed directly and the partner recovered from
/// u * v = -p/3. For p > 0 the two terms have opposite signs, so the sum
/// is rewritten as -q / (u^2 + v^2 + p/3), which has no subtraction.
double cardano_root(double p, double q, double delta) noexcept;

/// x0 + 2 sqrt(-p/3) cos((theta + 2 k pi) / 3) for k = 0, 1, 2.
double trig_root(double x0, double p, double theta, int k) noexcept;

/// arccos((-q/2) / (-p/3)^{3/2}) with the argument clamped to [-1, 1]. Requires p < 0.
double trig_angle(double p, double q) noexcept;

} // namespace parproj
