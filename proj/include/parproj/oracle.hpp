#pragma once

#include <vector>

#include "parproj/cubic.hpp"
#include "parproj/quartic.hpp"

namespace parproj::oracle {

// Brute-force ground truth: dense sampling, golden-section and bisection only.
// Nothing here may call the closed-form solvers it is used to check.

struct OracleConfig {
  int grid_points = 20001;  // odd, >= 1001
  int refine_iters = 200;
  double bracket_pad = 2.0;
};

struct OracleResult {
  std::vector<double> minimizers; // 1 or 2 entries, increasing
  double min_value = 0.0;
  bool tie = false;
  double cell = 0.0; // grid spacing; minima closer than a few cells merge
};

/// Throws Error(InvalidArgument) for a malformed config.
void validate(const OracleConfig& cfg);

/// Radius enclosing every real root of a polynomial, Fujiwara's bound.
/// `coeffs` is highest degree first with a nonzero leading entry.
double root_bound(const std::vector<double>& coeffs) noexcept;

/// Global minimizers of a quartic with c4 > 0 (Error(InvalidModel) otherwise).
OracleResult min_quartic(const Quartic& quartic, const OracleConfig& cfg = {});

/// Count of distinct real roots (1, 2 or 3) found by sign changes on a grid,
/// with local extrema of |f| refined to catch double roots and close pairs.
int root_count(const Cubic& f, const OracleConfig& cfg = {});

/// Golden-section minimization of fn over [lo, hi]; returns the final midpoint.
template <class Fn>
double golden_section(Fn&& fn, double lo, double hi, int iters, double width) {
  constexpr double inv_phi = 0.6180339887498948482;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = fn(c);
  double fd = fn(d);
  for (int i = 0; i < iters && (hi - lo) > width; ++i) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = fn(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = fn(d);
    }
  }
  return 0.5 * (lo + hi);
}

/// Bisection for a sign change of fn on [lo, hi] with fn(lo) * fn(hi) <= 0.
template <class Fn>
double bisect(Fn&& fn, double lo, double hi) {
  double flo = fn(lo);
  if (flo == 0.0)
    return lo;
  if (fn(hi) == 0.0)
    return hi;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi)
      break;
    const double fm = fn(mid);
    if (fm == 0.0)
      return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

} // namespace parproj::oracle
