#pragma once

#include "alexandrov/triangulation.hpp"

#include <map>
#include <string>
#include <vector>

namespace alexandrov {

/// Numeric thresholds shared by validation and classification.
struct Tolerances {
  /// Angle-sum slack (radians) separating essential vertices from flat ones.
  double angle = 1e-9;
  /// Faces with area below `degeneracy * max_length^2` are rejected.
  double degeneracy = 1e-12;
  /// Allowed absolute error of the total angle deficit against 4*pi.
  double gauss_bonnet = 1e-9;
};

/// Canonical unordered vertex pair (smaller index first).
struct EdgeKey {
  int i = 0;
  int j = 0;

  EdgeKey() = default;
  EdgeKey(int a, int b) : i(a < b ? a : b), j(a < b ? b : a) {}

  auto operator<=>(const EdgeKey&) const = default;
  [[nodiscard]] std::string str() const { return std::to_string(i) + "-" + std::to_string(j); }
};

using EdgeLengthMap = std::map<EdgeKey, double>;

/// A polyhedral metric on the sphere: a triangulation with a flat triangle for
/// every face. Immutable after construction.
class ConeMetric {
 public:
  ConeMetric() = default;

  /// Validates and builds from per-edge lengths indexed by `Triangulation::edge`.
  static ConeMetric from_edge_lengths(Triangulation tri, std::vector<double> lengths,
                                      const Tolerances& tol = {});

  [[nodiscard]] const Triangulation& triangulation() const noexcept { return tri_; }
  [[nodiscard]] int vertex_count() const noexcept { return tri_.vertex_count(); }
  [[nodiscard]] int face_count() const noexcept { return tri_.face_count(); }
  [[nodiscard]] int edge_count() const noexcept { return tri_.edge_count(); }

  [[nodiscard]] double length(int halfedge) const { return lengths_[tri_.edge(halfedge)]; }
  [[nodiscard]] double edge_length(int edge) const { return lengths_[edge]; }
  [[nodiscard]] const std::vector<double>& edge_lengths() const noexcept { return lengths_; }

  /// Angle of face(h) at tail(h), between h and prev(h).
  [[nodiscard]] double corner_angle(int halfedge) const;
  [[nodiscard]] double face_area(int face) const;
  [[nodiscard]] double total_area() const;
  [[nodiscard]] double max_edge_length() const;

  /// Pair-keyed lengths; only meaningful for simplicial complexes.
  [[nodiscard]] EdgeLengthMap length_map() const;

 private:
  Triangulation tri_;
  std::vector<double> lengths_;
};

/// Validates a simplicial triangulation plus pair-keyed edge lengths.
/// Throws MissingLength, TriangleInequalityViolation, DegenerateFace and the
/// topology errors raised while building the triangulation.
ConeMetric build_cone_metric(const Triangulation& tri, const EdgeLengthMap& lengths, const Tolerances& tol = {});

/// Convenience overload: builds the triangulation from vertex triples first.
ConeMetric build_cone_metric(int vertex_count, std::vector<Face> triangles, const EdgeLengthMap& lengths,
                             const Tolerances& tol = {});

}  // namespace alexandrov
