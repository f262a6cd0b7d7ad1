#include "parproj/parproj.h"

#include <algorithm>
#include <new>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "parproj/axis_geometry.hpp"
#include "parproj/cubic.hpp"
#include "parproj/error.hpp"
#include "parproj/oracle.hpp"
#include "parproj/parabola2d.hpp"
#include "parproj/paraboloid_nd.hpp"
#include "parproj/quartic.hpp"
#include "parproj/raster.hpp"

struct pp_context {
  parproj::Tolerance tol;
  std::string last_error;
};

struct pp_quadratic {
  parproj::Quadratic s;
};

struct pp_paraboloid {
  parproj::Paraboloid P;
};

struct pp_projection_nd {
  parproj::ProjectionN value;
  std::size_t dim;
};

struct pp_raster {
  parproj::RegionRaster raster;
};

namespace {

using namespace parproj;

pp_status to_status(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::InvalidArgument: return PP_ERR_INVALID_ARGUMENT;
  case ErrorCode::DegenerateCubic: return PP_ERR_DEGENERATE_CUBIC;
  case ErrorCode::DegenerateQuadratic: return PP_ERR_DEGENERATE_QUADRATIC;
  case ErrorCode::InvalidModel: return PP_ERR_INVALID_MODEL;
  case ErrorCode::InvalidOrdering: return PP_ERR_INVALID_ORDERING;
  case ErrorCode::ZeroDirection: return PP_ERR_ZERO_DIRECTION;
  case ErrorCode::DimensionMismatch: return PP_ERR_DIMENSION_MISMATCH;
  }
  return PP_ERR_INTERNAL;
}

const Tolerance& tolerance_of(const pp_context* ctx) {
  static const Tolerance defaults;
  return ctx ? ctx->tol : defaults;
}

pp_status fail(pp_context* ctx, pp_status status, const char* message) {
  if (ctx)
    ctx->last_error = message;
  return status;
}

// Runs body and converts any exception into a status plus a context message.
template <class Body>
pp_status guarded(pp_context* ctx, Body&& body) noexcept {
  try {
    if (ctx)
      ctx->last_error.clear();
    body();
    return PP_OK;
  } catch (const Error& e) {
    return fail(ctx, to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ctx, PP_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(ctx, PP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ctx, PP_ERR_INTERNAL, "unknown exception");
  }
}

pp_projection2 to_c(const Projection2& proj) {
  pp_projection2 out{};
  if (const auto* single = std::get_if<SinglePoint2>(&proj)) {
    out.count = 1;
    out.points[0] = {single->point.x, single->point.y};
  } else {
    const auto& pair = std::get<PointPair2>(proj);
    out.count = 2;
    out.points[0] = {pair.left.x, pair.left.y};
    out.points[1] = {pair.right.x, pair.right.y};
  }
  return out;
}

pp_minimizer_set to_c(const MinimizerSet& set) {
  pp_minimizer_set out{};
  if (const auto* one = std::get_if<SingleMinimizer>(&set)) {
    out.count = 1;
    out.x[0] = one->x;
  } else {
    const auto& two = std::get<TiedMinimizers>(set);
    out.count = 2;
    out.x[0] = two.x_low;
    out.x[1] = two.x_high;
  }
  return out;
}

oracle::OracleConfig from_c(const pp_oracle_config* cfg) {
  if (!cfg)
    return {};
  return {cfg->grid_points, cfg->refine_iters, cfg->bracket_pad};
}

Quartic quartic_from(const double coeffs[5]) {
  return {coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4]};
}

QueryPointN query_nd(const double* x, std::size_t n, double y) {
  QueryPointN pt;
  pt.x.assign(x, x + n);
  pt.y = y;
  return pt;
}

} // namespace

extern "C" {

const char* pp_status_string(pp_status status) {
  switch (status) {
  case PP_OK: return "ok";
  case PP_ERR_NULL_ARGUMENT: return "null argument";
  case PP_ERR_INVALID_ARGUMENT: return "invalid argument";
  case PP_ERR_DEGENERATE_CUBIC: return "degenerate cubic";
  case PP_ERR_DEGENERATE_QUADRATIC: return "degenerate quadratic";
  case PP_ERR_INVALID_MODEL: return "invalid model";
  case PP_ERR_INVALID_ORDERING: return "invalid ordering";
  case PP_ERR_ZERO_DIRECTION: return "zero direction";
  case PP_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
  case PP_ERR_BUFFER_TOO_SMALL: return "buffer too small";
  case PP_ERR_OUT_OF_MEMORY: return "out of memory";
  case PP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pp_version(void) { return "1.0.0"; }

pp_status pp_context_create(pp_context** out) {
  if (!out)
    return PP_ERR_NULL_ARGUMENT;
  *out = new (std::nothrow) pp_context{};
  return *out ? PP_OK : PP_ERR_OUT_OF_MEMORY;
}

void pp_context_destroy(pp_context* ctx) { delete ctx; }

void pp_default_tolerance(pp_tolerance* out) {
  if (!out)
    return;
  const Tolerance t;
  *out = {t.delta, t.q, t.norm, t.tie, t.residual};
}

pp_status pp_context_set_tolerance(pp_context* ctx, const pp_tolerance* tol) {
  if (!ctx || !tol)
    return PP_ERR_NULL_ARGUMENT;
  const double values[] = {tol->delta, tol->q, tol->norm, tol->tie, tol->residual};
  if (!std::all_of(std::begin(values), std::end(values), [](double v) { return v >= 0.0; }))
    return fail(ctx, PP_ERR_INVALID_ARGUMENT, "tolerances must be nonnegative");
  ctx->tol = {tol->delta, tol->q, tol->norm, tol->tie, tol->residual};
  ctx->last_error.clear();
  return PP_OK;
}

pp_status pp_context_get_tolerance(const pp_context* ctx, pp_tolerance* out) {
  if (!ctx || !out)
    return PP_ERR_NULL_ARGUMENT;
  *out = {ctx->tol.delta, ctx->tol.q, ctx->tol.norm, ctx->tol.tie, ctx->tol.residual};
  return PP_OK;
}

const char* pp_context_last_error(const pp_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

pp_status pp_cubic_depress(pp_context* ctx, double a, double b, double c, double d,
                           pp_depressed_cubic* out) {
  if (!out)
    return fail(ctx, PP_ERR_NULL_ARGUMENT, "out is null");
  return guarded(ctx, [&] {
    const DepressedCubic g = depress({a, b, c, d});
    *out = {g.x0, g.p, g.q, g.delta()};
  });
}

pp_status pp_cubic_solve(pp_context* ctx, double a, double b, double c, double d,
                         pp_cubic_roots* out) {
  if (!out)
    return fail(ctx, PP_ERR_NULL_ARGUMENT, "out is null");
  return guarded(ctx, [&] {
    const CubicRoots roots = solve_cubic({a, b, c, d}, tolerance_of(ctx));
    pp_cubic_roots r{};
    if (const auto* one = std::get_if<OneReal>(&roots)) {
      r.kind = PP_CUBIC_ONE_REAL;
      r.roots[0] = one->r;
    } else if (const auto* sd = std::get_if<SimpleDouble>(&roots)) {
      r.kind = PP_CUBIC_SIMPLE_DOUBLE;
      r.roots[0] = sd->simple;
      r.roots[1] = sd->double_root;
    } else {
      const auto& three = std::get<ThreeReal>(roots);
      r.kind = PP_CUBIC_THREE_REAL;
      r.roots[0] = three.r1;
      r.roots[1] = three.r2;
      r.roots[2] = three.r0;
      r.theta = three.theta;
    }
    *out = r;
  });
}

pp_status pp_pick_minimizers(pp_context* ctx, double r1, double r2, double r3,
                             pp_minimizer_set* out) {
  if (!out)
    return fail(ctx, PP_ERR_NULL_ARGUMENT, "out is null");
  return guarded(ctx, [&] { *out = to_c(pick_minimizers(r1, r2, r3, tolerance_of(ctx))); });
}

pp_status pp_quartic_minimize(pp_context* ctx, const double coeffs[5], pp_minimizer_set* out) {
  if (!coeffs || !out)
    return fail(ctx, PP_ERR_NULL_ARGUMENT, "coeffs or out is null");
  return guarded(ctx,
                 [&] { *out = to_c(minimize_quartic(quartic_from(coeffs), tolerance_of(ctx))); });
}

pp_status pp_quadratic_create(pp_context* ctx, double alpha, double beta, double gamma,
                              pp_quadratic** out) {
  if (!out)
    return fail(ctx, PP_ERR_NULL_ARGUMENT, "out is null");
  *out = nullptr;
  return guarded(ctx, [&] { *out = new pp_quadratic{Quadratic(alpha, beta, gamma)}; });
}

void pp_quadratic_destroy(pp_quadratic* s) { delete s; }

pp_status pp_quadratic_evaluate(const pp_quadratic* s, double x, double* out) {
  if (!s || !out)
    return PP_ERR_NULL_ARGUMENT;
  *out = evaluate(s->s, x);
  return PP_OK;
}

pp_status pp_distance_quartic(const pp_quadratic* s, double x, double y, double coeffs[5]) {
  if (!s || !coeffs)
    return PP_ERR_NULL_ARGUMENT;
  const Quartic q = distance_quartic(s->s, {x, y});
  coeffs[0] = q.c4;
  coeffs[1] = q.c3;
  coeffs[2] = q.c2;
  coeffs[3] = q.c1;
  coeffs[4] = q.c0;
  return PP_OK;
}

pp_status pp_case_data_compute(pp_context* ctx, const pp_quadratic* s, double x, double y,
                               int snapped, pp_case_data* out) {
  if (!s || !out)
    return fail(ctx, PP_ERR_NULL_ARGUMENT, "s or out is null");
  return guarded(ctx, [&] {
    const CaseData cd =
        snapped ? snapped_case_data(s->s, {x, y}, tolerance_of(ctx)) : case_data(s->s, {x, y});
    *out = {cd.p, cd.q, cd.delta, cd.x0, cd.theta_abs.has_value() ? 1 : 0,
            cd.theta_abs.value_or(0.0)};
  });
}

pp_status pp_project(pp_context* ctx, const pp_quadratic* s, double x, double y, pp_method method,
                     pp_projection2* out) {
  if (!s || !out)
    return fail(ctx, PP_ERR_NULL_ARGUMENT, "s or out is null");
  return guarded(ctx, [&] {
    const Tolerance& tol = tolerance_of(ctx);
    switch (method) {
    case PP_METHOD_COROLLARY: *out = to_c(project_corollary(s->s, {x, y}, tol)); return;
    case PP_METHOD_THEOREM: *out = to_c(project_theorem(s->s, {x, y}, tol)); return;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown projection method");
  });
}

pp_status pp_classify(pp_context* ctx, const pp_quadratic* s, double x, double y, pp_region* out) {
  if (!s || !out)
    return fail(ctx, PP_ERR_NULL_ARGUMENT, "s or out is null");
  return guarded(ctx, [&] {
    *out = static_cast<pp_region>(classify_region(s->s, {x, y}, tolerance_of(ctx)));
  });
}

const char* pp_region_name(pp_region region) {
  return to_string(static_cast<Region>(region)).data();
}

pp_status pp_axis_analyze(pp_context* ctx, const pp_quadratic* s, pp_axis_geometry* out) {
  if (!s || !out)
    return fail(ctx, PP_ERR_NULL_ARGUMENT, "s or out is null");
  const AxisGeometry g = analyze(s->s);
  *out = {g.x0, g.vertex_y, g.focus.x, g.focus.y, g.directrix_y, g.y0, g.curvature_radius};
  return PP_OK;
}

pp_status pp_axis_reflection(pp_context* ctx, const pp_quadratic* s, double* y0_direct,
                             double* y0_reflected) {
  if (!s || !y0_direct || !y0_reflected)
    return fail(ctx, PP_ERR_NULL_ARGUMENT, "null argument");
  const ReflectionIdentity r = check_reflection_identity(s->s);
  *y0_direct = r.y0_direct;
  *y0_reflected = r.y0_reflected;
  return PP_OK;
}

pp_status pp_axis_project(pp_context* ctx, const pp_quadratic* s, double ybar,
                          pp_projection2* out) {
  if (!s || !out)
    return fail(ctx, PP_ERR_NULL_ARGUMENT, "s or out is null");
  return guarded(ctx, [&] { *out = to_c(axis_projection(s->s, ybar, tolerance_of(ctx))); });
}

pp_status pp_paraboloid_create(pp_context* ctx, double alpha, size_t dim, pp_paraboloid** out) {
  if (!out)
    return fail(ctx, PP_ERR_NULL_ARGUMENT, "out is null");
  *out = nullptr;
  return guarded(ctx, [&] { *out = new pp_paraboloid{Paraboloid(alpha, dim)}; });
}

void pp_paraboloid_destroy(pp_paraboloid* P) { delete P; }

pp_status pp_paraboloid_delta(pp_context* ctx, const pp_paraboloid* P, const double* x, size_t n,
                              double y, double* out) {
  if (!P || (!x && n > 0) || !out)
    return fail(ctx, PP_ERR_NULL_ARGUMENT, "null argument");
  return guarded(ctx, [&] { *out = delta_nd(P->P, query_nd(x, n, y)); });
}

pp_status pp_paraboloid_project(pp_context* ctx, const pp_paraboloid* P, const double* x, size_t n,
                                double y, pp_projection_nd** out) {
  if (!P || (!x && n > 0) || !out)
    return fail(ctx, PP_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded(ctx, [&] {
    ProjectionN proj = project_nd(P->P, query_nd(x, n, y), tolerance_of(ctx));
    *out = new pp_projection_nd{std::move(proj), P->P.dim()};
  });
}

pp_status pp_paraboloid_reduce(pp_context* ctx, const pp_paraboloid* P, const double* x, size_t n,
                               double y, double* alpha_out, pp_point2* point_out) {
  if (!P || (!x && n > 0) || !alpha_out || !point_out)
    return fail(ctx, PP_ERR_NULL_ARGUMENT, "null argument");
  return guarded(ctx, [&] {
    const auto [s, pt] = reduce_to_2d(P->P, query_nd(x, n, y), tolerance_of(ctx));
    *alpha_out = s.alpha();
    *point_out = {pt.x, pt.y};
  });
}

void pp_projection_nd_destroy(pp_projection_nd* proj) { delete proj; }

pp_nd_kind pp_projection_nd_kind(const pp_projection_nd* proj) {
  return proj && std::holds_alternative<Sphere>(proj->value) ? PP_ND_SPHERE : PP_ND_POINT;
}

size_t pp_projection_nd_dim(const pp_projection_nd* proj) { return proj ? proj->dim : 0; }

pp_status pp_projection_nd_point(const pp_projection_nd* proj, double* w, size_t n, double* y) {
  if (!proj || !w || !y)
    return PP_ERR_NULL_ARGUMENT;
  const auto* point = std::get_if<PointN>(&proj->value);
  if (!point)
    return PP_ERR_INVALID_ARGUMENT;
  if (n < point->w.size())
    return PP_ERR_BUFFER_TOO_SMALL;
  std::copy(point->w.begin(), point->w.end(), w);
  *y = point->y;
  return PP_OK;
}

pp_status pp_projection_nd_sphere(const pp_projection_nd* proj, double* radius, double* height) {
  if (!proj || !radius || !height)
    return PP_ERR_NULL_ARGUMENT;
  const auto* sphere = std::get_if<Sphere>(&proj->value);
  if (!sphere)
    return PP_ERR_INVALID_ARGUMENT;
  *radius = sphere->radius;
  *height = sphere->height;
  return PP_OK;
}

pp_status pp_projection_nd_sphere_point(pp_context* ctx, const pp_paraboloid* P,
                                        const pp_projection_nd* proj, const double* direction,
                                        size_t n, double* w, double* y) {
  if (!P || !proj || !direction || !w || !y)
    return fail(ctx, PP_ERR_NULL_ARGUMENT, "null argument");
  const auto* sphere = std::get_if<Sphere>(&proj->value);
  if (!sphere)
    return fail(ctx, PP_ERR_INVALID_ARGUMENT, "projection is not a sphere");
  return guarded(ctx, [&] {
    const PointN point = sphere_point(P->P, *sphere, {direction, n});
    std::copy(point.w.begin(), point.w.end(), w);
    *y = point.y;
  });
}

void pp_oracle_default_config(pp_oracle_config* out) {
  if (!out)
    return;
  const oracle::OracleConfig cfg;
  *out = {cfg.grid_points, cfg.refine_iters, cfg.bracket_pad};
}

pp_status pp_oracle_min_quartic(pp_context* ctx, const double coeffs[5],
                                const pp_oracle_config* cfg, pp_oracle_result* out) {
  if (!coeffs || !out)
    return fail(ctx, PP_ERR_NULL_ARGUMENT, "coeffs or out is null");
  return guarded(ctx, [&] {
    const oracle::OracleResult r = oracle::min_quartic(quartic_from(coeffs), from_c(cfg));
    pp_oracle_result c{};
    c.count = static_cast<int>(r.minimizers.size());
    std::copy(r.minimizers.begin(), r.minimizers.end(), c.minimizers);
    c.min_value = r.min_value;
    c.tie = r.tie ? 1 : 0;
    c.cell = r.cell;
    *out = c;
  });
}

pp_status pp_oracle_root_count(pp_context* ctx, double a, double b, double c, double d,
                               const pp_oracle_config* cfg, int* out) {
  if (!out)
    return fail(ctx, PP_ERR_NULL_ARGUMENT, "out is null");
  return guarded(ctx, [&] { *out = oracle::root_count({a, b, c, d}, from_c(cfg)); });
}

void pp_default_raster_spec(pp_raster_spec* out) {
  if (!out)
    return;
  const RasterSpec spec;
  *out = {spec.x_min, spec.x_max, spec.y_min, spec.y_max, spec.width, spec.height};
}

pp_status pp_raster_create(pp_context* ctx, const pp_quadratic* s, const pp_raster_spec* spec,
                           pp_raster** out) {
  if (!s || !spec || !out)
    return fail(ctx, PP_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded(ctx, [&] {
    const RasterSpec rs{spec->x_min, spec->x_max, spec->y_min, spec->y_max, spec->width,
                        spec->height};
    *out = new pp_raster{region_raster(s->s, rs, tolerance_of(ctx))};
  });
}

void pp_raster_destroy(pp_raster* raster) { delete raster; }

int pp_raster_width(const pp_raster* raster) { return raster ? raster->raster.width : 0; }

int pp_raster_height(const pp_raster* raster) { return raster ? raster->raster.height : 0; }

const uint8_t* pp_raster_codes(const pp_raster* raster) {
  return raster ? raster->raster.codes.data() : nullptr;
}

int pp_raster_axis_column(const pp_raster* raster) {
  return raster ? raster->raster.axis_column.value_or(-1) : -1;
}

pp_status pp_raster_sample_point(const pp_raster* raster, int row, int col, pp_point2* out) {
  if (!raster || !out)
    return PP_ERR_NULL_ARGUMENT;
  const RegionRaster& r = raster->raster;
  if (row < 0 || row >= r.height || col < 0 || col >= r.width)
    return PP_ERR_INVALID_ARGUMENT;
  *out = {r.column_x[static_cast<std::size_t>(col)], r.row_y[static_cast<std::size_t>(row)]};
  return PP_OK;
}

} // extern "C"
