#pragma once

#include "alexandrov/cone_metric.hpp"
#include "alexandrov/mesh_editor.hpp"

#include <memory>
#include <vector>

namespace alexandrov {

/// Where an edge of an essential triangulation runs on the source surface: a
/// straight segment leaving `from` along `start` (source halfedge ids).
struct EdgeProvenance {
  int from = -1;  // source vertex ids
  int to = -1;
  double length = 0.0;
  Direction start;
  std::vector<int> faces;
  std::vector<EdgeCrossing> crossings;
  std::vector<int> through_vertices;  // flat source vertices on the segment
};

/// A triangulation of the same surface whose vertices are exactly the
/// essential vertices of the source metric.
struct EssentialTriangulation {
  ConeMetric metric;
  std::vector<int> source_vertex;         // metric vertex -> source vertex
  std::vector<double> signposts;          // per metric halfedge: direction at its tail in the source frame
  std::vector<EdgeProvenance> provenance;  // per metric edge
  std::shared_ptr<const ConeMetric> source;
};

/// Removes all flat vertices (flipping their spokes down to degree three and
/// merging the remaining star) and then flips to an intrinsic Delaunay
/// triangulation. Throws NotAdmissible, InvalidInput (fewer than three
/// essential vertices) and NumericallyAmbiguous.
EssentialTriangulation retriangulate_essential(const ConeMetric& metric, const Tolerances& tol = {});

/// Replaces an edge by the other diagonal of its unfolded quadrilateral.
/// Throws NotFlippable.
EssentialTriangulation edge_flip(const EssentialTriangulation& tri, int edge, const Tolerances& tol = {});

}  // namespace alexandrov
