#include <doctest.h>

#include <cmath>
#include <numbers>

#include "parproj/error.hpp"
#include "support.hpp"

using namespace parproj;
using doctest::Approx;

namespace {

Cubic shifted(const Cubic& f, double t) {
  // f(x - t), expanded.
  return {f.a, f.b - 3.0 * f.a * t, f.c - 2.0 * f.b * t + 3.0 * f.a * t * t,
          f.d - f.c * t + f.b * t * t - f.a * t * t * t};
}

bool near_double_root(const Cubic& f, double band) {
  const Cubic g = f.a < 0.0 ? Cubic{-f.a, -f.b, -f.c, -f.d} : f;
  const DepressedCubic dc = depress(g);
  const double third = std::abs(dc.p) / 3.0;
  const double scale = std::max(third * third * third, dc.q * dc.q / 4.0);
  return std::abs(dc.delta()) <= band * scale;
}

} // namespace

TEST_CASE("depress: worked examples") {
  const DepressedCubic already = depress({1, 0, -3, 0});
  CHECK(already.x0 == 0.0);
  CHECK(already.p == -3.0);
  CHECK(already.q == 0.0);

  const DepressedCubic shifted_form = depress({1, 3, 0, 0});
  CHECK(shifted_form.x0 == Approx(-1.0));
  CHECK(shifted_form.p == Approx(-3.0));
  CHECK(shifted_form.q == Approx(2.0));

  const DepressedCubic scaled = depress({2, 0, 0, -2});
  CHECK(scaled.x0 == 0.0);
  CHECK(scaled.p == 0.0);
  CHECK(scaled.q == -1.0);
}

TEST_CASE("depress: rejects a degenerate or non-finite cubic") {
  CHECK_THROWS_AS(depress({0, 1, 2, 3}), Error);
  try {
    depress({0, 1, 2, 3});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateCubic);
  }
  try {
    depress({1, NAN, 0, 0});
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
  CHECK_THROWS_AS(solve_cubic({0, 0, 1, 1}), Error);
}

TEST_CASE("depress: a g(z) reproduces f(z + x0)") {
  testing::Sampler rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Cubic f{rng.away_from_zero(10, 0.1), rng.uniform(-10, 10), rng.uniform(-10, 10),
                  rng.uniform(-10, 10)};
    const DepressedCubic g = depress(f);
    CHECK(g.x0 == Approx(-f.b / (3.0 * f.a)).epsilon(1e-15));
    CHECK(g.delta() == DepressedCubic::discriminant(g.p, g.q));
    for (double z : {-2.0, -0.5, 0.0, 0.75, 3.0}) {
      const double lhs = f.a * g(z);
      const double rhs = f(z + g.x0);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * f.residual_scale(z + g.x0) * (1.0 + std::abs(g.x0)) * 10.0);
    }
  }
}

TEST_CASE("solve_cubic: one real root with vanishing p") {
  const CubicRoots roots = solve_cubic({1, 0, 0, -1});
  REQUIRE(std::holds_alternative<OneReal>(roots));
  CHECK(std::get<OneReal>(roots).r == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("solve_cubic: simple plus double root") {
  const CubicRoots roots = solve_cubic({1, 0, -3, 2});
  REQUIRE(std::holds_alternative<SimpleDouble>(roots));
  CHECK(std::get<SimpleDouble>(roots).simple == Approx(-2.0).epsilon(1e-15));
  CHECK(std::get<SimpleDouble>(roots).double_root == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("solve_cubic: three real roots from the trigonometric form") {
  const CubicRoots roots = solve_cubic({1, 0, -3, 0});
  REQUIRE(std::holds_alternative<ThreeReal>(roots));
  const ThreeReal t = std::get<ThreeReal>(roots);
  CHECK(t.theta == Approx(std::numbers::pi / 2).epsilon(1e-15));
  CHECK(t.r1 == Approx(-std::sqrt(3.0)).epsilon(1e-15));
  CHECK(std::abs(t.r2) <= 1e-15);
  CHECK(t.r0 == Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(distinct_root_count(roots) == 3);
}

TEST_CASE("solve_cubic: negative leading coefficient keeps the roots") {
  const auto pos = testing::roots_of(solve_cubic({1, 0, -3, 2}));
  const auto neg = testing::roots_of(solve_cubic({-1, 0, 3, -2}));
  CHECK(pos == neg);
}

TEST_CASE("solve_cubic: small p and q are not mistaken for a double root") {
  const CubicRoots roots = solve_cubic({1, 0, -1e-6, 0});
  REQUIRE(std::holds_alternative<ThreeReal>(roots));
  const ThreeReal t = std::get<ThreeReal>(roots);
  CHECK(t.r1 == Approx(-1e-3).epsilon(1e-12));
  CHECK(t.r0 == Approx(1e-3).epsilon(1e-12));
}

TEST_CASE("cardano_root: no cancellation when the root is tiny") {
  // z^3 + z + q with |q| << 1 has root close to -q.
  for (double q : {1e-8, -1e-12, 3e-16, -7e-300}) {
    const double z = cardano_root(1.0, q, DepressedCubic::discriminant(1.0, q));
    CHECK(z == Approx(-q).epsilon(1e-14));
  }
}

TEST_CASE("trig_angle clamps arguments pushed past one by roundoff") {
  const double theta = trig_angle(-3.0, -2.0 * (1.0 + 1e-15));
  CHECK(theta == 0.0);
}

TEST_CASE("property: residual, ordering and Vieta on random cubics") {
  testing::Sampler rng(12);
  for (int i = 0; i < 20000; ++i) {
    const Cubic f{rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10)};
    const CubicRoots roots = solve_cubic(f);
    for (double r : testing::roots_of(roots))
      REQUIRE(std::abs(f(r)) <= 1e-10 * f.residual_scale(r));
    if (const auto* t = std::get_if<ThreeReal>(&roots)) {
      REQUIRE(t->r1 < t->r2);
      REQUIRE(t->r2 < t->r0);
      REQUIRE(t->theta > 0.0);
      REQUIRE(t->theta < std::numbers::pi);
      const double sum = -f.b / f.a;
      const double mag = std::abs(t->r1) + std::abs(t->r2) + std::abs(t->r0);
      REQUIRE(std::abs(t->r1 + t->r2 + t->r0 - sum) <= 1e-9 * std::max(mag, std::abs(sum)));
    }
  }
}

TEST_CASE("property: translation equivariance") {
  testing::Sampler rng(13);
  int checked = 0;
  for (int i = 0; i < 20000; ++i) {
    const Cubic f{rng.away_from_zero(10, 1.0), rng.uniform(-10, 10), rng.uniform(-10, 10),
                  rng.uniform(-10, 10)};
    const double t = rng.uniform(-10, 10);
    const Cubic g = shifted(f, t);
    if (near_double_root(f, 1e-6) || near_double_root(g, 1e-6))
      continue;
    const CubicRoots rf = solve_cubic(f);
    const CubicRoots rg = solve_cubic(g);
    REQUIRE(rf.index() == rg.index());
    const auto a = testing::roots_of(rf);
    const auto b = testing::roots_of(rg);
    for (std::size_t k = 0; k < a.size(); ++k)
      REQUIRE(std::abs(b[k] - (a[k] + t)) <= 1e-9);
    ++checked;
  }
  CHECK(checked > 19000);
}

TEST_CASE("property: scaling invariance") {
  testing::Sampler rng(14);
  for (int i = 0; i < 5000; ++i) {
    const Cubic f{rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10)};
    const CubicRoots base = solve_cubic(f);
    // Powers of two scale exactly, so the output is bit-identical.
    for (double lambda : {0.125, 2.0, 1024.0, std::ldexp(1.0, -40)}) {
      const CubicRoots scaled = solve_cubic({lambda * f.a, lambda * f.b, lambda * f.c, lambda * f.d});
      REQUIRE(scaled.index() == base.index());
      REQUIRE(testing::roots_of(scaled) == testing::roots_of(base));
    }
    if (near_double_root(f, 1e-6))
      continue;
    const double lambda = rng.uniform(0.01, 100.0);
    const CubicRoots scaled = solve_cubic({lambda * f.a, lambda * f.b, lambda * f.c, lambda * f.d});
    REQUIRE(scaled.index() == base.index());
    const auto a = testing::roots_of(base);
    const auto b = testing::roots_of(scaled);
    for (std::size_t k = 0; k < a.size(); ++k)
      REQUIRE(std::abs(a[k] - b[k]) <= 1e-9 * (1.0 + std::abs(a[k])));
  }
}

TEST_CASE("property: branch matches the sign-change oracle") {
  testing::Sampler rng(15);
  const Tolerance tol;
  for (int i = 0; i < 2000; ++i) {
    const Cubic f{rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10)};
    const DepressedCubic dc = depress(f.a < 0 ? Cubic{-f.a, -f.b, -f.c, -f.d} : f);
    if (snap_discriminant(dc.p, dc.q, dc.delta(), tol) == 0.0)
      continue;
    REQUIRE(distinct_root_count(solve_cubic(f)) == oracle::root_count(f));
  }
  // Constructed multiplicities, including the double root the grid alone cannot see.
  CHECK(oracle::root_count({1, 0, -3, 2}) == distinct_root_count(solve_cubic({1, 0, -3, 2})));
  CHECK(oracle::root_count({1, -3, 3, -1}) == distinct_root_count(solve_cubic({1, -3, 3, -1})));
}

TEST_CASE("property: exact double-root family") {
  testing::Sampler rng(16);
  for (int i = 0; i < 5000; ++i) {
    const double u = rng.dyadic(10.0, 8);
    const double v = rng.dyadic(10.0, 8);
    if (u == v)
      continue;
    const CubicRoots roots = solve_cubic({1.0, -(2.0 * u + v), u * u + 2.0 * u * v, -u * u * v});
    REQUIRE(std::holds_alternative<SimpleDouble>(roots));
    CHECK(std::get<SimpleDouble>(roots).simple == Approx(v).epsilon(1e-12).scale(1.0));
    CHECK(std::get<SimpleDouble>(roots).double_root == Approx(u).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("triple root collapses to a single real root") {
  const CubicRoots roots = solve_cubic({1, -3, 3, -1});
  REQUIRE(std::holds_alternative<OneReal>(roots));
  CHECK(std::get<OneReal>(roots).r == Approx(1.0).epsilon(1e-12));
}
