#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "parproj/cubic.hpp"
#include "parproj/oracle.hpp"
#include "parproj/parabola2d.hpp"
#include "parproj/paraboloid_nd.hpp"
#include "parproj/quartic.hpp"
#include "parproj/tolerance.hpp"

namespace testing {

class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// Uniform on [-limit, -floor] U [floor, limit].
  double away_from_zero(double limit, double floor) {
    const double mag = uniform(floor, limit);
    return integer(0, 1) ? mag : -mag;
  }

  /// Multiple of 2^-bits in [-limit, limit].
  double dyadic(double limit, int bits) {
    const double steps = std::floor(limit * std::ldexp(1.0, bits));
    return std::ldexp(static_cast<double>(integer(static_cast<int>(-steps), static_cast<int>(steps))), -bits);
  }

  /// Haar-distributed orthogonal matrix, row-major n x n.
  std::vector<double> orthogonal(std::size_t n);

private:
  std::mt19937_64 rng_;
};

inline std::vector<double> Sampler::orthogonal(std::size_t n) {
  std::vector<double> m(n * n);
  for (double& v : m)
    v = normal();
  // Modified Gram-Schmidt on the rows.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        dot += m[i * n + k] * m[j * n + k];
      for (std::size_t k = 0; k < n; ++k)
        m[i * n + k] -= dot * m[j * n + k];
    }
    double norm = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      norm += m[i * n + k] * m[i * n + k];
    norm = std::sqrt(norm);
    for (std::size_t k = 0; k < n; ++k)
      m[i * n + k] /= norm;
  }
  return m;
}

inline std::vector<double> apply(const std::vector<double>& m, const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      y[i] += m[i * n + k] * x[k];
  return y;
}

inline double norm2(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x)
    s += v * v;
  return std::sqrt(s);
}

inline std::vector<double> abscissae(const parproj::Projection2& proj) {
  if (const auto* one = std::get_if<parproj::SinglePoint2>(&proj))
    return {one->point.x};
  const auto& two = std::get<parproj::PointPair2>(proj);
  return {two.left.x, two.right.x};
}

inline std::vector<parproj::Point2> points(const parproj::Projection2& proj) {
  if (const auto* one = std::get_if<parproj::SinglePoint2>(&proj))
    return {one->point};
  const auto& two = std::get<parproj::PointPair2>(proj);
  return {two.left, two.right};
}

inline std::vector<double> roots_of(const parproj::CubicRoots& roots) {
  if (const auto* one = std::get_if<parproj::OneReal>(&roots))
    return {one->r};
  if (const auto* two = std::get_if<parproj::SimpleDouble>(&roots))
    return {two->simple, two->double_root};
  const auto& three = std::get<parproj::ThreeReal>(roots);
  return {three.r1, three.r2, three.r0};
}

inline std::vector<double> minimizers_of(const parproj::MinimizerSet& set) {
  if (const auto* one = std::get_if<parproj::SingleMinimizer>(&set))
    return {one->x};
  const auto& two = std::get<parproj::TiedMinimizers>(set);
  return {two.x_low, two.x_high};
}

/// Random 2-D instance with alpha bounded away from zero.
struct Instance2 {
  double alpha, beta, gamma, x, y;
  parproj::Quadratic quadratic() const { return {alpha, beta, gamma}; }
  parproj::QueryPoint2 point() const { return {x, y}; }
};

inline Instance2 random_instance(Sampler& rng, double alpha_floor = 0.05) {
  return {rng.away_from_zero(5.0, alpha_floor), rng.uniform(-5, 5), rng.uniform(-5, 5),
          rng.uniform(-5, 5), rng.uniform(-5, 5)};
}

/// |Q'(w)| relative to the coefficient scale of Q'.
inline double stationarity_residual(const parproj::Quadratic& s, parproj::QueryPoint2 pt, double w) {
  const parproj::Cubic slope = parproj::stationarity_cubic(s, pt);
  return std::abs(slope(w)) / slope.residual_scale(w);
}

/// |(x̄ - w) + (ȳ - s(w)) s'(w)| relative to the same scale.
inline double normal_line_residual(const parproj::Quadratic& s, parproj::QueryPoint2 pt, double w) {
  const double r = (pt.x - w) + (pt.y - parproj::evaluate(s, w)) * s.slope(w);
  return std::abs(r) / parproj::stationarity_cubic(s, pt).residual_scale(w);
}

/// Residual of (2 alpha^2 ||w||^2 + 1 - 2 alpha ȳ) w = x̄, relative to the
/// coefficient scale of the radial cubic.
inline double collinear_residual(double alpha, const std::vector<double>& x, double y,
                                 const std::vector<double>& w) {
  const double r2 = norm2(w) * norm2(w);
  const double factor = 2.0 * alpha * alpha * r2 + 1.0 - 2.0 * alpha * y;
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    worst = std::max(worst, std::abs(factor * w[i] - x[i]));
  const double coef = std::max({2.0 * alpha * alpha, std::abs(1.0 - 2.0 * alpha * y), norm2(x)});
  const double grow = 1.0 + norm2(w);
  return worst / (coef * grow * grow * grow);
}

inline double relative_gap(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), std::numeric_limits<double>::min()});
}

} // namespace testing
