#pragma once

#include "alexandrov/cone_metric.hpp"
#include "alexandrov/geometry.hpp"
#include "alexandrov/mesh_editor.hpp"

#include <Eigen/Core>

#include <array>
#include <cstddef>
#include <vector>

namespace alexandrov {

struct GeodesicOptions {
  std::size_t budget = 1'000'000;  // expanded unfolding windows per query
  Tolerances tol{};
};

/// One straight piece of a geodesic between two vertices. The piece leaves
/// `from` along `start`, runs through `faces` crossing the listed edges (each
/// crossing refers to the halfedge of the face being left), and ends at `to`.
struct GeodesicLeg {
  int from = -1;
  int to = -1;
  double length = 0.0;
  Direction start;
  std::vector<int> faces;
  std::vector<EdgeCrossing> crossings;
};

/// A shortest path between two vertices. It is a chain of legs; consecutive
/// legs meet at vertices with angle sum at least 2pi (flat vertices on
/// admissible metrics), where the path continues straight.
struct GeodesicPath {
  int source = -1;
  int target = -1;
  double length = 0.0;
  std::vector<GeodesicLeg> legs;
  std::vector<int> faces;
  std::vector<EdgeCrossing> crossings;
  std::vector<int> through_vertices;
  Vec2 unfolded_start = Vec2::Zero();
  Vec2 unfolded_end = Vec2::Zero();
};

/// Faces of a geodesic laid out in the plane along with the path polyline.
struct GeodesicStrip {
  std::vector<int> faces;
  std::vector<std::array<Vec2, 3>> triangles;  // corners in face slot order
  std::vector<Vec2> polyline;
};

/// Globally shortest path from v to w. The search always runs from the smaller
/// to the larger index and the result is reversed when needed, so both
/// directions report the same length. Ties within 1e-9 go to the
/// lexicographically smallest face sequence.
GeodesicPath shortest_geodesic(const ConeMetric& metric, int v, int w, const GeodesicOptions& opts = {});

/// The same path traversed backwards.
GeodesicPath reverse_path(const ConeMetric& metric, const GeodesicPath& path);

/// Lays the faces of the path out in the plane, starting at the origin along +x.
GeodesicStrip unfold_strip(const ConeMetric& metric, const GeodesicPath& path);

/// Pairwise geodesic distances between essential vertices (listed in `vertices`).
struct DistanceMatrix {
  std::vector<int> vertices;
  Eigen::MatrixXd distances;
};
DistanceMatrix distance_matrix(const ConeMetric& metric, const GeodesicOptions& opts = {});

/// Angular position of a direction around its vertex, measured
/// counter-clockwise from the vertex's first outgoing halfedge.
double angular_position(const ConeMetric& metric, const Direction& d);

/// Planar positions of the corners of face(h) with tail(h) and head(h) placed.
std::array<Vec2, 3> layout_face(const ConeMetric& metric, int h, const Vec2& tail_pos, const Vec2& head_pos);

}  // namespace alexandrov
