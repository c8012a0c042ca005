#pragma once

#include "alexandrov/cone_metric.hpp"
#include "alexandrov/geometry.hpp"

#include <vector>

namespace alexandrov {

/// Closed interval of boundary arc length, measured counter-clockwise from
/// polygon vertex 0.
struct ArcInterval {
  double begin = 0.0;
  double end = 0.0;
  [[nodiscard]] double length() const { return end - begin; }
};

/// Two boundary intervals glued to each other. Gluing is orientation
/// reversing: the point at `first.begin + u` meets `second.end - u`.
struct SegmentPair {
  ArcInterval first;
  ArcInterval second;
};

/// A convex polygon plus an identification of its boundary: either the double
/// (two copies glued along the boundary) or a pairing of boundary segments.
struct PolygonGluing {
  std::vector<Vec2> polygon;  // counter-clockwise
  bool doubled = false;
  std::vector<SegmentPair> pairs;
};

/// Two copies of a strictly convex polygon glued along their boundary.
/// Vertex i of the result is polygon corner i; the triangulation is simplicial
/// (the top sheet is fanned from corner 0, the bottom sheet from corner 1).
ConeMetric double_polygon(const std::vector<Vec2>& polygon, const Tolerances& tol = {});

/// Glues a single convex polygon along paired boundary segments. Boundary
/// breakpoints are closed under the identification; the polygon is fanned from
/// its vertex centroid, which stays in the complex as a flat vertex.
ConeMetric glue_polygon(const PolygonGluing& gluing, const Tolerances& tol = {});

/// The "paper-figure" preset: a 2x1 rectangle with every side folded at its
/// midpoint. The four corners meet in one flat point and the four side
/// midpoints become cone points of angle pi, so the surface is a tetrahedron
/// whose glue lines run through the interior of its faces.
PolygonGluing rectangle_gluing();

/// Bipyramid over a ring of k vertices built from equilateral triangles of the
/// given side: the two apexes (vertices 0 and 1) have angle sum k*pi/3, ring
/// vertices 4*pi/3.
ConeMetric star_gluing(int k, double side = 1.0, const Tolerances& tol = {});

}  // namespace alexandrov
