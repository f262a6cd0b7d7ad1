#pragma once

#include <variant>

#include "parproj/cubic.hpp"
#include "parproj/tolerance.hpp"

namespace parproj {

/// c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0, minimized only when c4 > 0.
struct Quartic {
  double c4 = 1.0;
  double c3 = 0.0;
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;

  double operator()(double x) const noexcept {
    return (((c4 * x + c3) * x + c2) * x + c1) * x + c0;
  }

  Cubic derivative() const noexcept { return {4.0 * c4, 3.0 * c3, 2.0 * c2, c1}; }
};

struct SingleMinimizer {
  double x = 0.0;
};

/// Two tied global minimizers, x_low < x_high.
struct TiedMinimizers {
  double x_low = 0.0;
  double x_high = 0.0;
};

using MinimizerSet = std::variant<SingleMinimizer, TiedMinimizers>;

/// Global minimizers among the outer critical points r1 < r2 < r3 of a quartic
/// with positive leading coefficient: whichever of r1, r3 lies farther from r2,
/// or both when they are equally far.
///
/// Throws Error(InvalidOrdering) unless r1 < r2 < r3.
MinimizerSet pick_minimizers(double r1, double r2, double r3, const Tolerance& tol = {});

/// Throws Error(InvalidModel) unless c4 > 0; propagates cubic solver errors.
MinimizerSet minimize_quartic(const Quartic& quartic, const Tolerance& tol = {});

} // namespace parproj
