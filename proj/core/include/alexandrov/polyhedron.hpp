#pragma once

#include "alexandrov/cone_metric.hpp"
#include "alexandrov/geometry.hpp"

#include <vector>

namespace alexandrov {

/// A facet of a 3D convex hull: indices into the input points, counter-clockwise
/// seen from outside.
struct HullFacet {
  std::vector<int> vertices;
};

/// Convex hull by incremental insertion in input order with exact orientation
/// predicates. Adjacent triangles are merged into one facet when coplanar
/// within 1e-9 * diameter, and collinear boundary points are dropped, so
/// facet cycles list strict corners only. Throws DegenerateInput when all
/// points are coplanar and TooFewPoints below four points.
std::vector<HullFacet> convex_hull_3d(const std::vector<Vec3>& points);

/// A convex polyhedron given by its vertices (extreme points only). Degenerate
/// polyhedra are planar convex polygons, stored counter-clockwise around
/// `plane_normal` starting from the lexicographically smallest corner;
/// nondegenerate ones store their vertices in lexicographic order.
struct Polyhedron {
  std::vector<Vec3> points;
  bool degenerate = false;
  Vec3 plane_normal = Vec3::Zero();
};

/// Extreme points of the hull of `points`, with the degenerate flag set when
/// they are coplanar (within 1e-9 * diameter). Throws TooFewPoints and
/// CollinearInput.
Polyhedron canonicalize_polyhedron(const std::vector<Vec3>& points);

/// Intrinsic metric of the polyhedron's surface. Vertex i of the metric is
/// `p.points[i]`. Hull facets are fanned from their smallest vertex index;
/// degenerate polyhedra become doubled polygons.
ConeMetric iota(const Polyhedron& p, const Tolerances& tol = {});

/// Euclidean surface area of the polyhedron (twice the polygon area when flat).
double surface_area(const Polyhedron& p);

/// Facets of the polyhedron (two opposite copies of the polygon when flat).
std::vector<HullFacet> polyhedron_facets(const Polyhedron& p);

/// Planar coordinates of a degenerate polyhedron's corners in its own plane.
std::vector<Vec2> planar_coordinates(const Polyhedron& p);

}  // namespace alexandrov
