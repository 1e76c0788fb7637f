#pragma once

#include <string>
#include <vector>

#include "cript/bitmap.hpp"
#include "cript/code.hpp"

namespace cript {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

using Polyline = std::vector<Point>;  // closed; the last vertex joins the first

struct PlanarBoundary {
  std::vector<Polyline> curves;
  std::vector<double> levels;  // one per code string, strictly decreasing
};

struct RealizeOptions {
  double band_height = 4.0;
  double letter_spacing = 4.0;
};

/// Builds closed polylines whose domain has `code` as its minimal code.
///
/// Letter p of string i sits at (p * letter_spacing, levels[i]). Conjugate
/// letters are joined by a segment along their level. A contact runs
/// vertically for a quarter band out of each level, with a straight
/// segment across the middle of the band. A band is stretched to a multiple
/// of `band_height` where needed so that no middle segment runs more than
/// two units sideways per unit of height.
///
/// Throws InvalidCodeError when `code` fails validation.
PlanarBoundary realize(const CriptCode& code, const RealizeOptions& options = {});

/// Throws GeometryError when a curve touches itself or another curve.
void check_simple(const PlanarBoundary& p);

/// Even-odd fill at `pixels_per_unit`; rows are filled in parallel. The
/// image covers the bounding box plus a one-pixel white margin.
Bitmap rasterize(const PlanarBoundary& p, double pixels_per_unit);

/// Per-pixel ray casting against every edge. Same output as rasterize().
Bitmap rasterize_reference(const PlanarBoundary& p, double pixels_per_unit);

/// One <path> with a subpath per curve and fill-rule="evenodd".
std::string to_svg(const PlanarBoundary& p);

}  // namespace cript
