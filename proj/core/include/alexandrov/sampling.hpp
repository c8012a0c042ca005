#pragma once

#include "alexandrov/cone_metric.hpp"
#include "alexandrov/geometry.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace alexandrov {

using Rng = std::mt19937_64;

/// n points in convex position: uniform directions on the unit sphere.
std::vector<Vec3> random_sphere_points(int n, Rng& rng);

/// Vertices of a random tetrahedron with edge lengths of order one. Flat ones
/// have their fourth vertex at height between 1e-4 and 1e-3 times the
/// diameter above the plane of the other three.
std::vector<Vec3> random_tetrahedron(Rng& rng, bool nearly_flat = false);

/// Strictly convex polygon with k corners on a circle (counter-clockwise).
std::vector<Vec2> random_convex_polygon(int k, Rng& rng);

/// The same metric with vertex i renamed to perm[i].
ConeMetric relabel(const ConeMetric& metric, const std::vector<int>& perm);

/// Random permutation of the metric's vertex ids.
ConeMetric random_relabel(const ConeMetric& metric, Rng& rng);

/// Adds `count` flat vertices at random interior points of faces and edges.
ConeMetric random_subdivision(const ConeMetric& metric, int count, Rng& rng);

/// Applies up to `count` random edge flips (only flippable edges are used).
ConeMetric random_flips(const ConeMetric& metric, int count, Rng& rng);

/// An admissible metric with four essential vertices: the surface of a random
/// tetrahedron, relabelled, subdivided with flat vertices and flipped.
ConeMetric random_four_vertex_metric(Rng& rng, bool nearly_flat = false);

}  // namespace alexandrov
