#include "parproj/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "parproj/error.hpp"

namespace parproj {

namespace {

// Unevaluated sum hi + lo with |lo| <= ulp(hi) / 2.
struct Twofold {
  double hi = 0.0;
  double lo = 0.0;
  double value() const noexcept { return hi + lo; }
};

Twofold quick_sum(double a, double b) noexcept {
  const double s = a + b;
  return {s, b - (s - a)};
}

Twofold two_sum(double a, double b) noexcept {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

Twofold product(double a, double b) noexcept {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

Twofold mul(Twofold x, double y) noexcept {
  Twofold p = product(x.hi, y);
  p.lo = std::fma(x.lo, y, p.lo);
  return quick_sum(p.hi, p.lo);
}

Twofold add(Twofold x, Twofold y) noexcept {
  Twofold s = two_sum(x.hi, y.hi);
  s.lo += x.lo + y.lo;
  return quick_sum(s.hi, s.lo);
}

} // namespace

double Cubic::residual_scale(double x) const noexcept {
  const double m = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  const double w = 1.0 + std::abs(x);
  return m * w * w * w;
}

int distinct_root_count(const CubicRoots& roots) noexcept {
  return static_cast<int>(roots.index()) + 1;
}

DepressedCubic depress(const Cubic& f) {
  if (!(std::isfinite(f.a) && std::isfinite(f.b) && std::isfinite(f.c) && std::isfinite(f.d)))
    throw Error(ErrorCode::InvalidArgument, "cubic coefficients must be finite");
  if (f.a == 0.0)
    throw Error(ErrorCode::DegenerateCubic, "leading cubic coefficient is zero");

  // Power-of-two rescaling is exact and keeps a^3, b^3 away from overflow.
  const int e = std::ilogb(std::max({std::abs(f.a), std::abs(f.b), std::abs(f.c), std::abs(f.d)}));
  const double a = std::ldexp(f.a, -e);
  const double b = std::ldexp(f.b, -e);
  const double c = std::ldexp(f.c, -e);
  const double d = std::ldexp(f.d, -e);

  // Numerators 3ac - b^2 and 27a^2 d + 2b^3 - 9abc cancel heavily near
  // multiple roots, so they are accumulated in double-double.
  const Twofold np = add(mul(product(a, c), 3.0), mul(product(b, b), -1.0));
  const Twofold nq = add(add(mul(mul(product(a, a), d), 27.0), mul(mul(product(b, b), b), 2.0)),
                         mul(mul(product(a, b), c), -9.0));

  DepressedCubic g;
  g.x0 = -b / (3.0 * a);
  g.p = np.value() / (3.0 * a * a);
  g.q = nq.value() / (27.0 * a * a * a);
  return g;
}

double snap_discriminant(double p, double q, double delta, const Tolerance& tol) noexcept {
  const double third = std::abs(p) / 3.0;
  const double half = q / 2.0;
  const double scale = std::max(third * third * third, half * half);
  return std::abs(delta) <= tol.delta * machine_eps * scale ? 0.0 : delta;
}

double cardano_root(double p, double q, double delta) noexcept {
  if (p == 0.0)
    return std::cbrt(-q);

  const double sd = std::sqrt(std::max(delta, 0.0));
  const double t = -q / 2.0 - std::copysign(sd, q);
  if (t == 0.0)
    return 0.0;

  const double u = std::cbrt(t);
  const double v = -p / (3.0 * u);
  if (p > 0.0)
    return -q / (u * u + v * v + p / 3.0);
  return u + v;
}

double trig_angle(double p, double q) noexcept {
  const double m = -p / 3.0;
  const double arg = (-q / 2.0) / (m * std::sqrt(m));
  return std::acos(std::clamp(arg, -1.0, 1.0));
}

double trig_root(double x0, double p, double theta, int k) noexcept {
  return x0 + 2.0 * std::sqrt(-p / 3.0) * std::cos((theta + 2.0 * k * std::numbers::pi) / 3.0);
}

namespace {

// One Newton step on the undepressed cubic, kept only if it lowers |f|. The
// shift back from the depressed variable cancels when |x0| dwarfs a root.
double polish(const Cubic& f, double r) noexcept {
  const double ar = std::abs(r);
  const double noise =
      8.0 * machine_eps * (((std::abs(f.a) * ar + std::abs(f.b)) * ar + std::abs(f.c)) * ar + std::abs(f.d));
  if (std::abs(f(r)) <= noise)
    return r;
  const double slope = (3.0 * f.a * r + 2.0 * f.b) * r + f.c;
  if (slope == 0.0 || !std::isfinite(slope))
    return r;
  const double next = r - f(r) / slope;
  return std::abs(f(next)) < std::abs(f(r)) ? next : r;
}

} // namespace

CubicRoots solve_cubic(const Cubic& f, const Tolerance& tol) {
  // The case table below assumes a > 0; negation keeps roots and multiplicities.
  const Cubic g = f.a < 0.0 ? Cubic{-f.a, -f.b, -f.c, -f.d} : f;
  const DepressedCubic dc = depress(g);
  const double delta = snap_discriminant(dc.p, dc.q, dc.delta(), tol);

  if (dc.p == 0.0 || delta > 0.0)
    return OneReal{polish(g, dc.x0 + cardano_root(dc.p, dc.q, delta))};

  if (delta == 0.0) {
    return SimpleDouble{polish(g, dc.x0 + 3.0 * dc.q / dc.p), dc.x0 - 3.0 * dc.q / (2.0 * dc.p)};
  }

  const double theta = trig_angle(dc.p, dc.q);
  const ThreeReal raw{trig_root(dc.x0, dc.p, theta, 1), trig_root(dc.x0, dc.p, theta, 2),
                      trig_root(dc.x0, dc.p, theta, 0), theta};
  const ThreeReal refined{polish(g, raw.r1), polish(g, raw.r2), polish(g, raw.r0), theta};
  return refined.r1 < refined.r2 && refined.r2 < refined.r0 ? refined : raw;
}

} // namespace parproj
