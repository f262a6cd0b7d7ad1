/*
 * parproj C interface.
 *
 * Every function returns a pp_status. Objects are opaque handles created by
 * pp_*_create and released by the matching pp_*_destroy. A pp_context holds
 * the tolerance settings and the message of the last failed call; it may be
 * passed as NULL to use default tolerances without error messages. A context
 * must not be shared between threads; every other handle is immutable after
 * creation and may be read from any number of threads.
 */
#ifndef PARPROJ_H
#define PARPROJ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PARPROJ_BUILDING)
#    define PARPROJ_API __declspec(dllexport)
#  else
#    define PARPROJ_API __declspec(dllimport)
#  endif
#else
#  define PARPROJ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pp_status {
  PP_OK = 0,
  PP_ERR_NULL_ARGUMENT = 1,
  PP_ERR_INVALID_ARGUMENT = 2,
  PP_ERR_DEGENERATE_CUBIC = 3,
  PP_ERR_DEGENERATE_QUADRATIC = 4,
  PP_ERR_INVALID_MODEL = 5,
  PP_ERR_INVALID_ORDERING = 6,
  PP_ERR_ZERO_DIRECTION = 7,
  PP_ERR_DIMENSION_MISMATCH = 8,
  PP_ERR_BUFFER_TOO_SMALL = 9,
  PP_ERR_OUT_OF_MEMORY = 10,
  PP_ERR_INTERNAL = 100
} pp_status;

typedef struct pp_context pp_context;
typedef struct pp_quadratic pp_quadratic;
typedef struct pp_paraboloid pp_paraboloid;
typedef struct pp_projection_nd pp_projection_nd;
typedef struct pp_raster pp_raster;

typedef struct pp_tolerance {
  double delta;    /* |Δ| snap band, in units of machine epsilon */
  double q;        /* axis snap band, in units of machine epsilon */
  double norm;     /* ||x|| snap band in n-D, in units of machine epsilon */
  double tie;      /* relative tie band for |2 r2 - r1 - r3| */
  double residual; /* accepted relative root residual */
} pp_tolerance;

typedef struct pp_point2 {
  double x;
  double y;
} pp_point2;

/* count is 1 (points[0]) or 2 (points[0].x < points[1].x). */
typedef struct pp_projection2 {
  int count;
  pp_point2 points[2];
} pp_projection2;

typedef enum pp_region {
  PP_REGION_NONNEGATIVE_DELTA = 0,
  PP_REGION_AXIS_MULTI_VALUED = 1,
  PP_REGION_TRIG_SINGLE = 2
} pp_region;

typedef enum pp_method {
  PP_METHOD_COROLLARY = 0, /* three-way split */
  PP_METHOD_THEOREM = 1    /* five-way split */
} pp_method;

typedef struct pp_case_data {
  double p;
  double q;
  double delta;
  double x0;
  int has_theta_abs;
  double theta_abs;
} pp_case_data;

typedef struct pp_axis_geometry {
  double x0;
  double vertex_y;
  double focus_x;
  double focus_y;
  double directrix_y;
  double y0;
  double curvature_radius;
} pp_axis_geometry;

typedef struct pp_depressed_cubic {
  double x0;
  double p;
  double q;
  double delta;
} pp_depressed_cubic;

typedef enum pp_cubic_kind {
  PP_CUBIC_ONE_REAL = 1,
  PP_CUBIC_SIMPLE_DOUBLE = 2,
  PP_CUBIC_THREE_REAL = 3
} pp_cubic_kind;

/*
 * ONE_REAL:      roots[0] = r
 * SIMPLE_DOUBLE: roots[0] = simple root, roots[1] = double root
 * THREE_REAL:    roots[0] < roots[1] < roots[2], theta in (0, pi)
 */
typedef struct pp_cubic_roots {
  pp_cubic_kind kind;
  double roots[3];
  double theta;
} pp_cubic_roots;

typedef struct pp_minimizer_set {
  int count;
  double x[2];
} pp_minimizer_set;

typedef struct pp_oracle_config {
  int grid_points;
  int refine_iters;
  double bracket_pad;
} pp_oracle_config;

typedef struct pp_oracle_result {
  int count;
  double minimizers[2];
  double min_value;
  int tie;
  double cell; /* grid spacing of the search */
} pp_oracle_result;

typedef enum pp_nd_kind {
  PP_ND_POINT = 1,
  PP_ND_SPHERE = 2
} pp_nd_kind;

typedef struct pp_raster_spec {
  double x_min;
  double x_max;
  double y_min;
  double y_max;
  int width;
  int height;
} pp_raster_spec;

PARPROJ_API const char* pp_status_string(pp_status status);
PARPROJ_API const char* pp_version(void);

/* context */
PARPROJ_API pp_status pp_context_create(pp_context** out);
PARPROJ_API void pp_context_destroy(pp_context* ctx);
PARPROJ_API void pp_default_tolerance(pp_tolerance* out);
PARPROJ_API pp_status pp_context_set_tolerance(pp_context* ctx, const pp_tolerance* tol);
PARPROJ_API pp_status pp_context_get_tolerance(const pp_context* ctx, pp_tolerance* out);
/* Message of the last failed call on ctx, "" if none. Valid until the next call. */
PARPROJ_API const char* pp_context_last_error(const pp_context* ctx);

/* cubic solver */
PARPROJ_API pp_status pp_cubic_depress(pp_context* ctx, double a, double b, double c, double d,
                                       pp_depressed_cubic* out);
PARPROJ_API pp_status pp_cubic_solve(pp_context* ctx, double a, double b, double c, double d,
                                     pp_cubic_roots* out);

/* quartic minimizer; coeffs = {c4, c3, c2, c1, c0} */
PARPROJ_API pp_status pp_pick_minimizers(pp_context* ctx, double r1, double r2, double r3,
                                         pp_minimizer_set* out);
PARPROJ_API pp_status pp_quartic_minimize(pp_context* ctx, const double coeffs[5],
                                          pp_minimizer_set* out);

/* planar parabola s(x) = alpha x^2 + beta x + gamma */
PARPROJ_API pp_status pp_quadratic_create(pp_context* ctx, double alpha, double beta, double gamma,
                                          pp_quadratic** out);
PARPROJ_API void pp_quadratic_destroy(pp_quadratic* s);
PARPROJ_API pp_status pp_quadratic_evaluate(const pp_quadratic* s, double x, double* out);
/* coeffs receives the squared-distance quartic {c4, c3, c2, c1, c0} */
PARPROJ_API pp_status pp_distance_quartic(const pp_quadratic* s, double x, double y,
                                          double coeffs[5]);
/* snapped != 0 applies the axis and discriminant snapping used for branching */
PARPROJ_API pp_status pp_case_data_compute(pp_context* ctx, const pp_quadratic* s, double x,
                                           double y, int snapped, pp_case_data* out);
PARPROJ_API pp_status pp_project(pp_context* ctx, const pp_quadratic* s, double x, double y,
                                 pp_method method, pp_projection2* out);
PARPROJ_API pp_status pp_classify(pp_context* ctx, const pp_quadratic* s, double x, double y,
                                  pp_region* out);
PARPROJ_API const char* pp_region_name(pp_region region);

/* axis geometry */
PARPROJ_API pp_status pp_axis_analyze(pp_context* ctx, const pp_quadratic* s,
                                      pp_axis_geometry* out);
PARPROJ_API pp_status pp_axis_reflection(pp_context* ctx, const pp_quadratic* s,
                                         double* y0_direct, double* y0_reflected);
PARPROJ_API pp_status pp_axis_project(pp_context* ctx, const pp_quadratic* s, double ybar,
                                      pp_projection2* out);

/* paraboloid alpha ||x||^2 in R^n */
PARPROJ_API pp_status pp_paraboloid_create(pp_context* ctx, double alpha, size_t dim,
                                           pp_paraboloid** out);
PARPROJ_API void pp_paraboloid_destroy(pp_paraboloid* P);
PARPROJ_API pp_status pp_paraboloid_delta(pp_context* ctx, const pp_paraboloid* P,
                                          const double* x, size_t n, double y, double* out);
PARPROJ_API pp_status pp_paraboloid_project(pp_context* ctx, const pp_paraboloid* P,
                                            const double* x, size_t n, double y,
                                            pp_projection_nd** out);
/* The planar problem along x: alpha_out x^2 and the point (||x||, y). */
PARPROJ_API pp_status pp_paraboloid_reduce(pp_context* ctx, const pp_paraboloid* P,
                                           const double* x, size_t n, double y,
                                           double* alpha_out, pp_point2* point_out);
PARPROJ_API void pp_projection_nd_destroy(pp_projection_nd* proj);
PARPROJ_API pp_nd_kind pp_projection_nd_kind(const pp_projection_nd* proj);
PARPROJ_API size_t pp_projection_nd_dim(const pp_projection_nd* proj);
/* PP_ND_POINT only; w must hold n >= dim entries. */
PARPROJ_API pp_status pp_projection_nd_point(const pp_projection_nd* proj, double* w, size_t n,
                                             double* y);
/* PP_ND_SPHERE only. */
PARPROJ_API pp_status pp_projection_nd_sphere(const pp_projection_nd* proj, double* radius,
                                              double* height);
/* PP_ND_SPHERE only: the sphere point along direction (length dim). */
PARPROJ_API pp_status pp_projection_nd_sphere_point(pp_context* ctx, const pp_paraboloid* P,
                                                    const pp_projection_nd* proj,
                                                    const double* direction, size_t n, double* w,
                                                    double* y);

/* brute-force oracle */
PARPROJ_API void pp_oracle_default_config(pp_oracle_config* out);
PARPROJ_API pp_status pp_oracle_min_quartic(pp_context* ctx, const double coeffs[5],
                                            const pp_oracle_config* cfg, pp_oracle_result* out);
PARPROJ_API pp_status pp_oracle_root_count(pp_context* ctx, double a, double b, double c, double d,
                                           const pp_oracle_config* cfg, int* out);

/* region raster; codes are pp_region values, row 0 at y_max */
PARPROJ_API void pp_default_raster_spec(pp_raster_spec* out);
PARPROJ_API pp_status pp_raster_create(pp_context* ctx, const pp_quadratic* s,
                                       const pp_raster_spec* spec, pp_raster** out);
PARPROJ_API void pp_raster_destroy(pp_raster* raster);
PARPROJ_API int pp_raster_width(const pp_raster* raster);
PARPROJ_API int pp_raster_height(const pp_raster* raster);
PARPROJ_API const uint8_t* pp_raster_codes(const pp_raster* raster);
/* -1 when the axis lies outside the window */
PARPROJ_API int pp_raster_axis_column(const pp_raster* raster);
/* The point classified for pixel (row, col). */
PARPROJ_API pp_status pp_raster_sample_point(const pp_raster* raster, int row, int col,
                                             pp_point2* out);

#ifdef __cplusplus
}
#endif

#endif /* PARPROJ_H */
