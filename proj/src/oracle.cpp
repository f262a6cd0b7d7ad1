#include "parproj/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "parproj/error.hpp"

namespace parproj::oracle {

namespace {

std::vector<double> grid(double bound, int n) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    xs[static_cast<std::size_t>(i)] = -bound + 2.0 * bound * i / (n - 1);
  return xs;
}

double search_bound(const std::vector<double>& coeffs, double pad) {
  const double b = root_bound(coeffs);
  return pad * (b > 0.0 ? b : 1.0);
}

struct Candidate {
  double x;
  double value;
};

} // namespace

void validate(const OracleConfig& cfg) {
  if (cfg.grid_points < 1001 || cfg.grid_points % 2 == 0)
    throw Error(ErrorCode::InvalidArgument, "oracle grid_points must be odd and >= 1001");
  if (cfg.refine_iters < 1)
    throw Error(ErrorCode::InvalidArgument, "oracle refine_iters must be positive");
  if (!(cfg.bracket_pad >= 1.0) || !std::isfinite(cfg.bracket_pad))
    throw Error(ErrorCode::InvalidArgument, "oracle bracket_pad must be >= 1");
}

double root_bound(const std::vector<double>& coeffs) noexcept {
  const std::size_t n = coeffs.size() - 1;
  const double lead = std::abs(coeffs.front());
  double bound = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    double ratio = std::abs(coeffs[k]) / lead;
    if (k == n)
      ratio /= 2.0;
    bound = std::max(bound, std::pow(ratio, 1.0 / static_cast<double>(k)));
  }
  return 2.0 * bound;
}

OracleResult min_quartic(const Quartic& quartic, const OracleConfig& cfg) {
  validate(cfg);
  if (!(quartic.c4 > 0.0))
    throw Error(ErrorCode::InvalidModel, "quartic leading coefficient must be positive");

  const Cubic slope = quartic.derivative();
  const double bound = search_bound({slope.a, slope.b, slope.c, slope.d}, cfg.bracket_pad);
  const std::vector<double> xs = grid(bound, cfg.grid_points);
  std::vector<double> qs(xs.size());
  std::transform(xs.begin(), xs.end(), qs.begin(), [&](double x) { return quartic(x); });

  const double cell = xs[1] - xs[0];
  std::vector<Candidate> found;
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    if (!(qs[i] <= qs[i - 1] && qs[i] < qs[i + 1]))
      continue;
    const double lo = xs[i - 1];
    const double hi = xs[i + 1];
    double x = golden_section(quartic, lo, hi, cfg.refine_iters, 1e-12 * bound);
    // Golden section stalls at sqrt(eps) on flat minima; a sign change of Q'
    // inside the cell pins the location to full precision.
    if (slope(lo) <= 0.0 && slope(hi) >= 0.0)
      x = bisect(slope, lo, hi);
    found.push_back({x, quartic(x)});
  }
  if (found.empty()) {
    const auto it = std::min_element(qs.begin(), qs.end());
    const double x = xs[static_cast<std::size_t>(it - qs.begin())];
    found.push_back({x, quartic(x)});
  }

  std::sort(found.begin(), found.end(),
            [](const Candidate& l, const Candidate& r) { return l.value < r.value; });
  // Drop duplicates of the same basin reached from adjacent grid minima.
  std::vector<Candidate> basins;
  for (const Candidate& c : found) {
    const bool seen = std::any_of(basins.begin(), basins.end(), [&](const Candidate& b) {
      return std::abs(b.x - c.x) <= 2.0 * cell;
    });
    if (!seen)
      basins.push_back(c);
  }

  OracleResult out;
  out.cell = cell;
  out.min_value = basins.front().value;
  out.minimizers.push_back(basins.front().x);
  if (basins.size() > 1 &&
      basins[1].value - basins[0].value <= 1e-9 * (1.0 + std::abs(out.min_value))) {
    out.tie = true;
    out.minimizers.push_back(basins[1].x);
    std::sort(out.minimizers.begin(), out.minimizers.end());
  }
  return out;
}

int root_count(const Cubic& f, const OracleConfig& cfg) {
  validate(cfg);
  if (f.a == 0.0)
    throw Error(ErrorCode::DegenerateCubic, "leading cubic coefficient is zero");

  const double bound = search_bound({f.a, f.b, f.c, f.d}, cfg.bracket_pad);
  const std::vector<double> xs = grid(bound, cfg.grid_points);
  std::vector<double> fs(xs.size());
  std::transform(xs.begin(), xs.end(), fs.begin(), [&](double x) { return f(x); });

  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (fs[i] == 0.0)
      roots.push_back(xs[i]);
    else if ((fs[i] < 0.0) != (fs[i + 1] < 0.0) && fs[i + 1] != 0.0)
      roots.push_back(bisect(f, xs[i], xs[i + 1]));
  }
  if (fs.back() == 0.0)
    roots.push_back(xs.back());

  // A local extremum of f without a sign change either touches zero (double
  // root) or dips across zero between two grid nodes (close simple pair).
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    const double sign = fs[i] > 0.0 ? 1.0 : -1.0;
    if (fs[i] == 0.0 || sign * fs[i - 1] <= 0.0 || sign * fs[i + 1] <= 0.0)
      continue;
    if (!(std::abs(fs[i]) <= std::abs(fs[i - 1]) && std::abs(fs[i]) < std::abs(fs[i + 1])))
      continue;
    auto toward_zero = [&](double x) { return sign * f(x); };
    const double lo = xs[i - 1];
    const double hi = xs[i + 1];
    const double xm = golden_section(toward_zero, lo, hi, cfg.refine_iters, 1e-12 * bound);
    const double depth = toward_zero(xm);
    const double threshold = 1e-9 * f.residual_scale(xm);
    if (depth < -threshold) {
      roots.push_back(bisect(f, lo, xm));
      roots.push_back(bisect(f, xm, hi));
    } else if (depth <= threshold) {
      roots.push_back(xm);
    }
  }

  std::sort(roots.begin(), roots.end());
  const auto last = std::unique(roots.begin(), roots.end(), [&](double l, double r) {
    return std::abs(l - r) <= 1e-12 * bound;
  });
  const auto count = static_cast<int>(last - roots.begin());
  return std::clamp(count, 1, 3);
}

} // namespace parproj::oracle
