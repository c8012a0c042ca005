#pragma once

#include "alexandrov/builders.hpp"
#include "alexandrov/cone_metric.hpp"
#include "alexandrov/correspondence.hpp"
#include "alexandrov/geodesics.hpp"
#include "alexandrov/geometry.hpp"
#include "alexandrov/polyhedron.hpp"

#include <string>
#include <vector>

namespace alexandrov {

/// Shortest-form rendering with 17 significant digits ("%.17g"), with ".0"
/// appended to integral values so numbers always read back as doubles.
std::string format_number(double x);

/// True when no edge is a loop and no two edges join the same pair of vertices,
/// so that the metric is determined by its triangles and pair-keyed lengths.
bool is_simplicial(const ConeMetric& metric);

/// Splits loops and parallel edges at their midpoints until the triangulation
/// is simplicial. The new vertices are flat and numbered after the old ones.
ConeMetric make_simplicial(const ConeMetric& metric);

/// Metric document:
///   {"vertex_count": n, "triangles": [[a, b, c], ...], "lengths": {"i-j": x, ...}}
/// Unknown keys are rejected with InvalidInput. Non-simplicial metrics are
/// made simplicial before writing.
ConeMetric parse_metric_json(const std::string& text, const Tolerances& tol = {});
std::string emit_metric_json(const ConeMetric& metric);

/// Point-set document: {"points": [[x, y, z], ...]}.
std::vector<Vec3> parse_points_json(const std::string& text);
std::string emit_points_json(const std::vector<Vec3>& points);

/// Gluing document: {"polygon": [[x, y], ...], "scheme": "double"} or a scheme
/// listing segment pairs as [[[b0, e0], [b1, e1]], ...] in boundary arc length.
PolygonGluing parse_gluing_json(const std::string& text);
std::string emit_gluing_json(const PolygonGluing& gluing);

std::string emit_report_json(const ConeMetric& metric, const Tolerances& tol = {});
std::string emit_path_json(const GeodesicPath& path);
std::string emit_embedding_json(const EmbeddingResult& result);
std::string emit_fingerprint_json(const IsometryFingerprint& fp);

/// Wavefront OBJ with one-based polygon faces.
std::string emit_obj(const std::vector<Vec3>& points, const std::vector<std::vector<int>>& faces);

/// Reads a whole file; throws InvalidInput when it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace alexandrov
