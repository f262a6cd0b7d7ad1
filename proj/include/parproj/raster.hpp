#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "parproj/parabola2d.hpp"

namespace parproj {

/// Sampling window for a region map. Row 0 is the top (y_max) edge.
struct RasterSpec {
  double x_min = -1.7;
  double x_max = 1.3;
  double y_min = -1.5;
  double y_max = 0.6;
  int width = 300;
  int height = 210;
};

struct RegionRaster {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> codes; // row-major, Region values
  std::vector<double> column_x;    // abscissa sampled in each column
  std::vector<double> row_y;       // ordinate sampled in each row
  std::optional<int> axis_column;  // column sampled exactly on the symmetry axis

  std::uint8_t at(int row, int col) const { return codes[static_cast<std::size_t>(row * width + col)]; }
};

/// Throws Error(InvalidArgument) for an empty or inverted window.
void validate(const RasterSpec& spec);

double pixel_center_x(const RasterSpec& spec, int col) noexcept;
double pixel_center_y(const RasterSpec& spec, int row) noexcept;

/// Classifies every pixel center. The axis has zero width, so the column
/// containing x0 is sampled at x = x0 instead of its center; otherwise the
/// two-point region would never show up.
RegionRaster region_raster(const Quadratic& s, const RasterSpec& spec, const Tolerance& tol = {});

} // namespace parproj
