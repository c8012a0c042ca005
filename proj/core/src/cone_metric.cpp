#include "alexandrov/cone_metric.hpp"

#include "alexandrov/error.hpp"
#include "alexandrov/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace alexandrov {

namespace {

std::string describe_face(const Triangulation& tri, int f) {
  const Face& t = tri.faces()[f];
  return "face " + std::to_string(f) + " (" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " +
         std::to_string(t[2]) + ")";
}

}  // namespace

ConeMetric ConeMetric::from_edge_lengths(Triangulation tri, std::vector<double> lengths, const Tolerances& tol) {
  if (static_cast<int>(lengths.size()) != tri.edge_count()) {
    throw Error(ErrorCode::InvalidInput, "edge length table size mismatch");
  }
  for (int e = 0; e < tri.edge_count(); ++e) {
    const double l = lengths[e];
    if (!(l > 0.0) || !std::isfinite(l)) {
      const int h = tri.edge_halfedge(e);
      throw Error(ErrorCode::InvalidInput, "edge " + EdgeKey(tri.tail(h), tri.head(h)).str() +
                                               " has non-positive or non-finite length");
    }
  }
  ConeMetric m;
  m.tri_ = std::move(tri);
  m.lengths_ = std::move(lengths);

  for (int f = 0; f < m.face_count(); ++f) {
    const double a = m.length(3 * f), b = m.length(3 * f + 1), c = m.length(3 * f + 2);
    if (a >= b + c || b >= a + c || c >= a + b) {
      const bool strict_violation = a > b + c || b > a + c || c > a + b;
      throw Error(strict_violation ? ErrorCode::TriangleInequalityViolation : ErrorCode::DegenerateFace,
                  describe_face(m.tri_, f) + " with lengths (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                      std::to_string(c) + ")");
    }
    const double lmax = std::max({a, b, c});
    if (triangle_area(a, b, c) < tol.degeneracy * lmax * lmax) {
      throw Error(ErrorCode::DegenerateFace, describe_face(m.tri_, f) + " is a needle below the degeneracy floor");
    }
  }

  // Gauss-Bonnet holds identically on a sphere; a mismatch means the angles are garbage.
  double total = 0.0;
  for (int h = 0; h < m.tri_.halfedge_count(); ++h) total += m.corner_angle(h);
  const double deficit = kTwoPi * m.vertex_count() - total;
  if (std::abs(deficit - 2.0 * kTwoPi) > tol.gauss_bonnet) {
    throw Error(ErrorCode::DegenerateFace, "total angle deficit " + std::to_string(deficit) + " differs from 4*pi");
  }
  return m;
}

double ConeMetric::corner_angle(int h) const {
  return alexandrov::corner_angle(length(Triangulation::next(h)), length(h), length(Triangulation::prev(h)));
}

double ConeMetric::face_area(int f) const {
  return triangle_area(length(3 * f), length(3 * f + 1), length(3 * f + 2));
}

double ConeMetric::total_area() const {
  double s = 0.0;
  for (int f = 0; f < face_count(); ++f) s += face_area(f);
  return s;
}

double ConeMetric::max_edge_length() const {
  return lengths_.empty() ? 0.0 : *std::max_element(lengths_.begin(), lengths_.end());
}

EdgeLengthMap ConeMetric::length_map() const {
  EdgeLengthMap out;
  for (int e = 0; e < edge_count(); ++e) {
    const int h = tri_.edge_halfedge(e);
    out[EdgeKey(tri_.tail(h), tri_.head(h))] = lengths_[e];
  }
  return out;
}

ConeMetric build_cone_metric(const Triangulation& tri, const EdgeLengthMap& lengths, const Tolerances& tol) {
  std::vector<double> per_edge(tri.edge_count());
  for (int e = 0; e < tri.edge_count(); ++e) {
    const int h = tri.edge_halfedge(e);
    const EdgeKey key(tri.tail(h), tri.head(h));
    const auto it = lengths.find(key);
    if (it == lengths.end()) throw Error(ErrorCode::MissingLength, "no length for edge " + key.str());
    per_edge[e] = it->second;
  }
  for (const auto& [key, value] : lengths) {
    (void)value;
    if (!tri.find_halfedge(key.i, key.j)) {
      throw Error(ErrorCode::InvalidInput, "length given for " + key.str() + ", which is not an edge");
    }
  }
  return ConeMetric::from_edge_lengths(tri, std::move(per_edge), tol);
}

ConeMetric build_cone_metric(int vertex_count, std::vector<Face> triangles, const EdgeLengthMap& lengths,
                             const Tolerances& tol) {
  return build_cone_metric(Triangulation::from_triangles(vertex_count, std::move(triangles)), lengths, tol);
}

}  // namespace alexandrov
