#pragma once

#include "alexandrov/cone_metric.hpp"
#include "alexandrov/geodesics.hpp"
#include "alexandrov/geometry.hpp"

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

namespace alexandrov {

/// Cayley-Menger determinant of four points from their pairwise distances,
/// given in the order d01, d02, d03, d12, d13, d23. Equals 288 * volume^2.
double cayley_menger(const std::array<double, 6>& d);

/// A tetrahedron realizing a metric with four essential vertices.
struct EmbeddingResult {
  std::array<Vec3, 4> points;
  std::array<int, 4> vertices{};  // metric vertex realized by each point
  double cayley_menger = 0.0;
  double signed_volume = 0.0;
  bool degenerate = false;  // flat tetrahedron (doubled quadrilateral or triangle)
  std::array<double, 6> residuals{};  // per pair, same order as cayley_menger
  double max_residual = 0.0;
  std::size_t triangulations_visited = 0;
};

struct EmbedOptions {
  std::size_t flip_budget = 10'000;
  double verify_tol = 1e-6;
  GeodesicOptions geodesic{};
};

/// Realizes an admissible metric with exactly four essential vertices as a
/// (possibly flat) tetrahedron. Searches the flip graph of its essential
/// triangulation for an edge set that closes up in space, solves for
/// coordinates (first point at the origin, second on the x axis, third in the
/// xy plane with y >= 0, fourth with z >= 0), and checks that the tetrahedron's
/// surface has the input's fingerprint. Throws WrongVertexCount, NotAdmissible,
/// FlipSearchExhausted and VerificationFailed.
EmbeddingResult embed4(const ConeMetric& metric, const EmbedOptions& opts = {});

/// Isometry invariants: sorted deficits of essential vertices, sorted pairwise
/// geodesic distances between them, and total area.
struct IsometryFingerprint {
  std::vector<double> deficits;
  std::vector<double> distances;
  double area = 0.0;
};

IsometryFingerprint fingerprint(const ConeMetric& metric, const GeodesicOptions& opts = {});

/// Field-wise comparison with |x - y| <= tol * max(1, |x|, |y|).
bool fingerprints_match(const IsometryFingerprint& a, const IsometryFingerprint& b, double tol);

/// Largest field-wise relative difference (infinity when the sizes differ).
double fingerprint_distance(const IsometryFingerprint& a, const IsometryFingerprint& b);

enum class Verdict { Distinct, Consistent };
std::string_view to_string(Verdict v);

/// Distinct when the fingerprints differ beyond `tol`; Consistent otherwise
/// (necessary conditions for isometry hold, which is not a proof).
Verdict probably_isometric(const ConeMetric& a, const ConeMetric& b, double tol = 1e-6,
                           const GeodesicOptions& opts = {});

}  // namespace alexandrov
