#include "parproj/quartic.hpp"

#include <algorithm>
#include <cmath>

#include "parproj/error.hpp"

namespace parproj {

MinimizerSet pick_minimizers(double r1, double r2, double r3, const Tolerance& tol) {
  if (!(r1 < r2 && r2 < r3))
    throw Error(ErrorCode::InvalidOrdering, "critical points must satisfy r1 < r2 < r3");

  // Q(r3) - Q(r1) = (a/3)(r1 - 2 r2 + r3)(r1 - r3)^3, so the sign of the skew decides.
  const double skew = 2.0 * r2 - r1 - r3;
  if (std::abs(skew) <= tol.tie * std::max({std::abs(r1), std::abs(r3), 1.0}))
    return TiedMinimizers{r1, r3};
  if (skew < 0.0)
    return SingleMinimizer{r3};
  return SingleMinimizer{r1};
}

MinimizerSet minimize_quartic(const Quartic& quartic, const Tolerance& tol) {
  if (!(quartic.c4 > 0.0))
    throw Error(ErrorCode::InvalidModel, "quartic leading coefficient must be positive");

  const CubicRoots roots = solve_cubic(quartic.derivative(), tol);
  if (const auto* one = std::get_if<OneReal>(&roots))
    return SingleMinimizer{one->r};
  // The double root of Q' is an inflection of Q, never a minimizer.
  if (const auto* sd = std::get_if<SimpleDouble>(&roots))
    return SingleMinimizer{sd->simple};

  const auto& three = std::get<ThreeReal>(roots);
  // Roundoff can merge two of the trigonometric roots; the merged pair is then
  // an inflection and the isolated root is the minimizer.
  if (!(three.r1 < three.r2))
    return SingleMinimizer{three.r0};
  if (!(three.r2 < three.r0))
    return SingleMinimizer{three.r1};
  return pick_minimizers(three.r1, three.r2, three.r0, tol);
}

} // namespace parproj
