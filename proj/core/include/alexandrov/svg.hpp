#pragma once

#include "alexandrov/cone_metric.hpp"
#include "alexandrov/geodesics.hpp"
#include "alexandrov/geometry.hpp"

#include <array>
#include <string>
#include <vector>

namespace alexandrov {

/// Every face of a metric laid out in the plane along a breadth-first spanning
/// tree of the dual graph (face 0 first, neighbours in slot order).
struct NetLayout {
  std::vector<std::array<Vec2, 3>> triangles;  // per face, corners in slot order
  std::vector<int> parent_halfedge;             // halfedge of the face crossed to reach it, -1 for roots
  bool overlaps = false;                        // two laid-out faces share interior points
};

NetLayout unfold_net(const ConeMetric& metric);

/// A rendered drawing. Lengths in the drawing equal metric lengths times `scale`.
struct SvgDocument {
  std::string text;
  double scale = 1.0;
  bool overlap_warning = false;
};

/// Net of the metric: tree edges dashed, cut edges solid, faces labelled.
SvgDocument export_svg_net(const ConeMetric& metric);

/// The unfolded strip of faces around a geodesic and the path as a straight
/// polyline.
SvgDocument export_svg_path(const ConeMetric& metric, const GeodesicPath& path);

}  // namespace alexandrov
