#pragma once

#include "alexandrov/builders.hpp"
#include "alexandrov/cone_metric.hpp"
#include "alexandrov/polyhedron.hpp"
#include "alexandrov/sampling.hpp"

#include <cmath>
#include <vector>

namespace fixtures {

using namespace alexandrov;

inline std::vector<Vec3> cube_points() {
  std::vector<Vec3> p;
  for (int i = 0; i < 8; ++i) p.emplace_back(i & 1, (i >> 1) & 1, (i >> 2) & 1);
  return p;
}

// Corners are numbered lexicographically: vertex 4x + 2y + z sits at (x, y, z).
inline ConeMetric cube() { return iota(canonicalize_polyhedron(cube_points())); }

inline std::vector<Vec2> unit_square() { return {{0, 0}, {1, 0}, {1, 1}, {0, 1}}; }

inline ConeMetric doubled_square() { return double_polygon(unit_square()); }

inline ConeMetric regular_tetrahedron() {
  return iota(canonicalize_polyhedron({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}));
}

inline std::vector<Vec2> regular_polygon(int k, double r = 1.0) {
  std::vector<Vec2> p;
  for (int i = 0; i < k; ++i) p.emplace_back(r * std::cos(2 * M_PI * i / k), r * std::sin(2 * M_PI * i / k));
  return p;
}

// Metrics of every built-in kind plus `random_count` random polyhedra.
inline std::vector<ConeMetric> corpus(int random_count, std::uint64_t seed = 7) {
  std::vector<ConeMetric> out{cube(), regular_tetrahedron(), doubled_square(),
                              double_polygon({{0, 0}, {4, 0}, {0, 3}}), double_polygon(regular_polygon(6)),
                              glue_polygon(rectangle_gluing())};
  for (int k = 3; k <= 6; ++k) out.push_back(star_gluing(k));
  Rng rng(seed);
  for (int i = 0; i < random_count; ++i) {
    const int n = std::uniform_int_distribution<int>(4, 12)(rng);
    out.push_back(iota(canonicalize_polyhedron(random_sphere_points(n, rng))));
  }
  return out;
}

}  // namespace fixtures
