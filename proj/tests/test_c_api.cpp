#include <doctest.h>

#include <cmath>
#include <cstring>
#include <memory>
#include <vector>

#include "parproj/parproj.h"

using doctest::Approx;

namespace {

struct Context {
  pp_context* ctx = nullptr;
  Context() { REQUIRE(pp_context_create(&ctx) == PP_OK); }
  ~Context() { pp_context_destroy(ctx); }
};

struct Parabola {
  pp_quadratic* s = nullptr;
  Parabola(pp_context* ctx, double a, double b, double g) {
    REQUIRE(pp_quadratic_create(ctx, a, b, g, &s) == PP_OK);
  }
  ~Parabola() { pp_quadratic_destroy(s); }
};

} // namespace

TEST_CASE("c api: version and status strings") {
  CHECK(std::strcmp(pp_version(), "1.0.0") == 0);
  CHECK(std::strcmp(pp_status_string(PP_OK), "ok") == 0);
  CHECK(std::strlen(pp_status_string(PP_ERR_DEGENERATE_QUADRATIC)) > 0);
  CHECK(std::strlen(pp_status_string(static_cast<pp_status>(12345))) > 0);
}

TEST_CASE("c api: tolerance round trip and validation") {
  Context c;
  pp_tolerance tol{};
  pp_default_tolerance(&tol);
  CHECK(tol.delta == 64.0);
  CHECK(tol.tie == 1e-10);
  tol.q = 0.0;
  CHECK(pp_context_set_tolerance(c.ctx, &tol) == PP_OK);
  pp_tolerance back{};
  CHECK(pp_context_get_tolerance(c.ctx, &back) == PP_OK);
  CHECK(back.q == 0.0);
  tol.delta = -1.0;
  CHECK(pp_context_set_tolerance(c.ctx, &tol) == PP_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(pp_context_last_error(c.ctx)) > 0);
  CHECK(pp_context_set_tolerance(nullptr, &tol) == PP_ERR_NULL_ARGUMENT);
  CHECK(pp_context_create(nullptr) == PP_ERR_NULL_ARGUMENT);
}

TEST_CASE("c api: errors map to status codes and messages") {
  Context c;
  pp_quadratic* s = nullptr;
  CHECK(pp_quadratic_create(c.ctx, 0.0, 1.0, 1.0, &s) == PP_ERR_DEGENERATE_QUADRATIC);
  CHECK(s == nullptr);
  CHECK(std::strstr(pp_context_last_error(c.ctx), "alpha") != nullptr);

  pp_cubic_roots roots{};
  CHECK(pp_cubic_solve(c.ctx, 0, 1, 2, 3, &roots) == PP_ERR_DEGENERATE_CUBIC);
  pp_minimizer_set set{};
  CHECK(pp_pick_minimizers(c.ctx, 1, 0, 2, &set) == PP_ERR_INVALID_ORDERING);
  const double bad[5] = {-1, 0, 0, 0, 0};
  CHECK(pp_quartic_minimize(c.ctx, bad, &set) == PP_ERR_INVALID_MODEL);
  pp_paraboloid* P = nullptr;
  CHECK(pp_paraboloid_create(c.ctx, -1.0, 2, &P) == PP_ERR_INVALID_MODEL);

  // A successful call clears the previous message.
  CHECK(pp_cubic_solve(c.ctx, 1, 0, -3, 0, &roots) == PP_OK);
  CHECK(std::strcmp(pp_context_last_error(c.ctx), "") == 0);

  // Null context is allowed and uses defaults.
  CHECK(pp_cubic_solve(nullptr, 1, 0, -3, 0, &roots) == PP_OK);
  CHECK(pp_cubic_solve(nullptr, 1, 0, -3, 0, nullptr) == PP_ERR_NULL_ARGUMENT);
}

TEST_CASE("c api: cubic and quartic") {
  pp_depressed_cubic dc{};
  REQUIRE(pp_cubic_depress(nullptr, 1, 3, 0, 0, &dc) == PP_OK);
  CHECK(dc.x0 == Approx(-1.0));
  CHECK(dc.p == Approx(-3.0));
  CHECK(dc.q == Approx(2.0));
  CHECK(dc.delta == Approx(0.0).scale(1.0));

  pp_cubic_roots roots{};
  REQUIRE(pp_cubic_solve(nullptr, 1, 0, -3, 2, &roots) == PP_OK);
  CHECK(roots.kind == PP_CUBIC_SIMPLE_DOUBLE);
  CHECK(roots.roots[0] == Approx(-2.0));
  CHECK(roots.roots[1] == Approx(1.0));
  REQUIRE(pp_cubic_solve(nullptr, 1, 0, -3, 0, &roots) == PP_OK);
  CHECK(roots.kind == PP_CUBIC_THREE_REAL);
  CHECK(roots.roots[0] < roots.roots[1]);
  CHECK(roots.roots[1] < roots.roots[2]);

  pp_minimizer_set set{};
  const double tie[5] = {1, 0, -2, 0, 1};
  REQUIRE(pp_quartic_minimize(nullptr, tie, &set) == PP_OK);
  CHECK(set.count == 2);
  REQUIRE(pp_pick_minimizers(nullptr, -2, 0, 1, &set) == PP_OK);
  CHECK(set.count == 1);
  CHECK(set.x[0] == -2.0);
}

TEST_CASE("c api: planar projection, classification and case data") {
  Context c;
  Parabola unit(c.ctx, 1, 0, 0);
  pp_projection2 proj{};
  for (pp_method m : {PP_METHOD_COROLLARY, PP_METHOD_THEOREM}) {
    REQUIRE(pp_project(c.ctx, unit.s, 0.0, 1.0, m, &proj) == PP_OK);
    CHECK(proj.count == 2);
    CHECK(proj.points[0].x == Approx(-std::sqrt(0.5)));
    CHECK(proj.points[1].x == Approx(std::sqrt(0.5)));
    CHECK(proj.points[1].y == Approx(0.5));
  }
  CHECK(pp_project(c.ctx, unit.s, NAN, 1.0, PP_METHOD_COROLLARY, &proj) == PP_ERR_INVALID_ARGUMENT);
  CHECK(pp_project(c.ctx, unit.s, 0.0, 1.0, static_cast<pp_method>(7), &proj) == PP_ERR_INVALID_ARGUMENT);

  pp_region region{};
  REQUIRE(pp_classify(c.ctx, unit.s, 3.0, 5.0, &region) == PP_OK);
  CHECK(region == PP_REGION_TRIG_SINGLE);
  CHECK(std::strcmp(pp_region_name(region), "trig_single") == 0);

  pp_case_data cd{};
  REQUIRE(pp_case_data_compute(c.ctx, unit.s, 3.0, 5.0, 0, &cd) == PP_OK);
  CHECK(cd.p == -4.5);
  CHECK(cd.q == -1.5);
  CHECK(cd.has_theta_abs == 1);

  double coeffs[5];
  REQUIRE(pp_distance_quartic(unit.s, 2.0, 0.0, coeffs) == PP_OK);
  CHECK(coeffs[0] == 1.0);
  CHECK(coeffs[2] == 1.0);
  CHECK(coeffs[3] == -4.0);
  CHECK(coeffs[4] == 4.0);
  double y = 0;
  REQUIRE(pp_quadratic_evaluate(unit.s, 3.0, &y) == PP_OK);
  CHECK(y == 9.0);
}

TEST_CASE("c api: axis geometry") {
  Context c;
  Parabola fig(c.ctx, 2, 1, -1);
  pp_axis_geometry g{};
  REQUIRE(pp_axis_analyze(c.ctx, fig.s, &g) == PP_OK);
  CHECK(g.x0 == -0.25);
  CHECK(g.y0 == -0.875);
  CHECK(g.focus_y == -1.0);
  CHECK(g.directrix_y == -1.25);
  CHECK(g.curvature_radius == 0.25);
  double direct = 0, reflected = 0;
  REQUIRE(pp_axis_reflection(c.ctx, fig.s, &direct, &reflected) == PP_OK);
  CHECK(direct == reflected);
  pp_projection2 proj{};
  REQUIRE(pp_axis_project(c.ctx, fig.s, 0.0, &proj) == PP_OK);
  CHECK(proj.count == 2);
  REQUIRE(pp_axis_project(c.ctx, fig.s, -1.0, &proj) == PP_OK);
  CHECK(proj.count == 1);
  CHECK(proj.points[0].y == -1.125);
}

TEST_CASE("c api: paraboloid handles") {
  Context c;
  pp_paraboloid* P = nullptr;
  REQUIRE(pp_paraboloid_create(c.ctx, 1.0, 2, &P) == PP_OK);
  std::unique_ptr<pp_paraboloid, decltype(&pp_paraboloid_destroy)> guard(P, &pp_paraboloid_destroy);

  const double axis[2] = {0.0, 0.0};
  pp_projection_nd* proj = nullptr;
  REQUIRE(pp_paraboloid_project(c.ctx, P, axis, 2, 1.0, &proj) == PP_OK);
  CHECK(pp_projection_nd_kind(proj) == PP_ND_SPHERE);
  CHECK(pp_projection_nd_dim(proj) == 2);
  double radius = 0, height = 0;
  REQUIRE(pp_projection_nd_sphere(proj, &radius, &height) == PP_OK);
  CHECK(radius == Approx(std::sqrt(0.5)));
  CHECK(height == Approx(0.5));
  double w[2], y = 0;
  CHECK(pp_projection_nd_point(proj, w, 2, &y) == PP_ERR_INVALID_ARGUMENT);
  const double dir[2] = {0.0, 3.0};
  REQUIRE(pp_projection_nd_sphere_point(c.ctx, P, proj, dir, 2, w, &y) == PP_OK);
  CHECK(w[0] == 0.0);
  CHECK(w[1] == Approx(std::sqrt(0.5)));
  pp_projection_nd_destroy(proj);

  const double x[2] = {3.0, 4.0};
  REQUIRE(pp_paraboloid_project(c.ctx, P, x, 2, 0.0, &proj) == PP_OK);
  CHECK(pp_projection_nd_kind(proj) == PP_ND_POINT);
  CHECK(pp_projection_nd_point(proj, w, 1, &y) == PP_ERR_BUFFER_TOO_SMALL);
  REQUIRE(pp_projection_nd_point(proj, w, 2, &y) == PP_OK);
  CHECK(w[0] == Approx(0.74086369503197819));
  CHECK(w[1] == Approx(0.98781826004263758));
  CHECK(pp_projection_nd_sphere(proj, &radius, &height) == PP_ERR_INVALID_ARGUMENT);
  pp_projection_nd_destroy(proj);

  double delta = 0;
  REQUIRE(pp_paraboloid_delta(c.ctx, P, x, 2, 0.0, &delta) == PP_OK);
  CHECK(delta == Approx(1.0 / 216 + 25.0 / 16));
  double alpha = 0;
  pp_point2 flat{};
  REQUIRE(pp_paraboloid_reduce(c.ctx, P, x, 2, 0.0, &alpha, &flat) == PP_OK);
  CHECK(alpha == 1.0);
  CHECK(flat.x == 5.0);
  CHECK(pp_paraboloid_reduce(c.ctx, P, axis, 2, 1.0, &alpha, &flat) == PP_ERR_ZERO_DIRECTION);
  CHECK(pp_paraboloid_project(c.ctx, P, x, 1, 0.0, &proj) == PP_ERR_DIMENSION_MISMATCH);
}

TEST_CASE("c api: oracle") {
  pp_oracle_config cfg{};
  pp_oracle_default_config(&cfg);
  CHECK(cfg.grid_points == 20001);
  const double tie[5] = {1, 0, -2, 0, 1};
  pp_oracle_result r{};
  REQUIRE(pp_oracle_min_quartic(nullptr, tie, &cfg, &r) == PP_OK);
  CHECK(r.tie == 1);
  CHECK(r.count == 2);
  CHECK(r.cell > 0.0);
  int count = 0;
  REQUIRE(pp_oracle_root_count(nullptr, 1, 0, -3, 2, nullptr, &count) == PP_OK);
  CHECK(count == 2);
  cfg.grid_points = 10;
  CHECK(pp_oracle_min_quartic(nullptr, tie, &cfg, &r) == PP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("c api: raster") {
  Context c;
  Parabola fig(c.ctx, 2, 1, -1);
  pp_raster_spec spec{};
  pp_default_raster_spec(&spec);
  CHECK(spec.width == 300);
  CHECK(spec.height == 210);
  pp_raster* r = nullptr;
  REQUIRE(pp_raster_create(c.ctx, fig.s, &spec, &r) == PP_OK);
  CHECK(pp_raster_width(r) == 300);
  CHECK(pp_raster_height(r) == 210);
  const int col = pp_raster_axis_column(r);
  REQUIRE(col >= 0);
  pp_point2 pt{};
  REQUIRE(pp_raster_sample_point(r, 0, col, &pt) == PP_OK);
  CHECK(pt.x == -0.25);
  CHECK(pp_raster_codes(r)[col] == PP_REGION_AXIS_MULTI_VALUED);
  CHECK(pp_raster_sample_point(r, 210, 0, &pt) == PP_ERR_INVALID_ARGUMENT);
  pp_raster_destroy(r);

  spec.width = 0;
  CHECK(pp_raster_create(c.ctx, fig.s, &spec, &r) == PP_ERR_INVALID_ARGUMENT);
  pp_raster_destroy(nullptr);
}
