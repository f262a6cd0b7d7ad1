#include "parproj/raster.hpp"

#include <algorithm>
#include <cmath>

#include "parproj/error.hpp"

namespace parproj {

void validate(const RasterSpec& spec) {
  const bool finite = std::isfinite(spec.x_min) && std::isfinite(spec.x_max) &&
                      std::isfinite(spec.y_min) && std::isfinite(spec.y_max);
  if (!finite || !(spec.x_min < spec.x_max) || !(spec.y_min < spec.y_max))
    throw Error(ErrorCode::InvalidArgument, "raster window must satisfy min < max");
  if (spec.width < 1 || spec.height < 1)
    throw Error(ErrorCode::InvalidArgument, "raster dimensions must be positive");
}

double pixel_center_x(const RasterSpec& spec, int col) noexcept {
  return spec.x_min + (col + 0.5) * (spec.x_max - spec.x_min) / spec.width;
}

double pixel_center_y(const RasterSpec& spec, int row) noexcept {
  return spec.y_max - (row + 0.5) * (spec.y_max - spec.y_min) / spec.height;
}

RegionRaster region_raster(const Quadratic& s, const RasterSpec& spec, const Tolerance& tol) {
  validate(spec);

  RegionRaster out;
  out.width = spec.width;
  out.height = spec.height;
  out.codes.resize(static_cast<std::size_t>(spec.width) * static_cast<std::size_t>(spec.height));

  const double x0 = s.axis();
  if (x0 >= spec.x_min && x0 <= spec.x_max) {
    const double cell = (spec.x_max - spec.x_min) / spec.width;
    const int col = static_cast<int>(std::floor((x0 - spec.x_min) / cell));
    out.axis_column = std::clamp(col, 0, spec.width - 1);
  }

  out.column_x.resize(static_cast<std::size_t>(spec.width));
  for (int col = 0; col < spec.width; ++col)
    out.column_x[static_cast<std::size_t>(col)] =
        out.axis_column == col ? x0 : pixel_center_x(spec, col);
  out.row_y.resize(static_cast<std::size_t>(spec.height));
  for (int row = 0; row < spec.height; ++row)
    out.row_y[static_cast<std::size_t>(row)] = pixel_center_y(spec, row);

  for (int row = 0; row < spec.height; ++row) {
    const double y = out.row_y[static_cast<std::size_t>(row)];
    for (int col = 0; col < spec.width; ++col) {
      const double x = out.column_x[static_cast<std::size_t>(col)];
      const Region r = classify_region(s, {x, y}, tol);
      out.codes[static_cast<std::size_t>(row * spec.width + col)] = static_cast<std::uint8_t>(r);
    }
  }
  return out;
}

} // namespace parproj
