#include "alexandrov/curvature.hpp"
#include "alexandrov/error.hpp"
#include "alexandrov/polyhedron.hpp"
#include "alexandrov/sampling.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <set>

using namespace alexandrov;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidInput;
}

// Reference area from the facet polygons via the shoelace formula in 3D.
double facet_area_sum(const Polyhedron& p) {
  double total = 0.0;
  for (const auto& f : polyhedron_facets(p)) {
    Vec3 acc = Vec3::Zero();
    for (std::size_t i = 0; i < f.vertices.size(); ++i) {
      acc += p.points[f.vertices[i]].cross(p.points[f.vertices[(i + 1) % f.vertices.size()]]);
    }
    total += 0.5 * acc.norm();
  }
  return total;
}

}  // namespace

TEST(ConvexHull, CubeHasSixQuadFacets) {
  const auto facets = convex_hull_3d(fixtures::cube_points());
  ASSERT_EQ(facets.size(), 6u);
  for (const auto& f : facets) EXPECT_EQ(f.vertices.size(), 4u);
}

TEST(ConvexHull, InteriorPointsAreDropped) {
  auto pts = fixtures::cube_points();
  pts.emplace_back(0.5, 0.5, 0.5);
  pts.emplace_back(0.5, 0.5, 0.0);  // on a facet
  const Polyhedron p = canonicalize_polyhedron(pts);
  EXPECT_EQ(p.points.size(), 8u);
  EXPECT_FALSE(p.degenerate);
}

TEST(Iota, CubeHasEightCornersOfThreeHalfPi) {
  const ConeMetric m = fixtures::cube();
  const auto rep = curvature_report(m);
  EXPECT_EQ(rep.essential_count(), 8);
  for (const auto& v : rep.vertices) EXPECT_NEAR(v.angle_sum, 1.5 * std::numbers::pi, 1e-12);
  EXPECT_TRUE(is_in_psi(m).admissible);
}

TEST(Iota, RegularTetrahedronHasFourCornersOfPi) {
  const auto rep = curvature_report(fixtures::regular_tetrahedron());
  EXPECT_EQ(rep.essential_count(), 4);
  for (const auto& v : rep.vertices) EXPECT_NEAR(v.angle_sum, std::numbers::pi, 1e-12);
}

TEST(Iota, FlatSquareBecomesDoubledSquare) {
  const Polyhedron p = canonicalize_polyhedron({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0.5, 0.5, 0}});
  EXPECT_TRUE(p.degenerate);
  ASSERT_EQ(p.points.size(), 4u);
  const ConeMetric m = iota(p);
  const auto rep = curvature_report(m);
  EXPECT_EQ(rep.essential_count(), 4);
  for (int v : rep.essential_vertices()) EXPECT_NEAR(rep.vertices[v].angle_sum, std::numbers::pi, 1e-12);
  EXPECT_NEAR(m.total_area(), 2.0, 1e-12);
  EXPECT_NEAR(surface_area(p), 2.0, 1e-12);
}

TEST(Iota, Errors) {
  EXPECT_EQ(code_of([] { (void)canonicalize_polyhedron({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}}); }),
            ErrorCode::CollinearInput);
  EXPECT_EQ(code_of([] { (void)canonicalize_polyhedron({{0, 0, 0}, {1, 0, 0}}); }), ErrorCode::TooFewPoints);
}

TEST(IotaProperty, EssentialVerticesAreHullVertices) {
  Rng rng(2024);
  for (int i = 0; i < 40; ++i) {
    const int n = std::uniform_int_distribution<int>(4, 12)(rng);
    auto pts = random_sphere_points(n, rng);
    // Interior points never become vertices.
    Vec3 centroid = Vec3::Zero();
    for (const auto& q : pts) centroid += q / n;
    pts.push_back(centroid);
    const Polyhedron p = canonicalize_polyhedron(pts);
    ASSERT_EQ(static_cast<int>(p.points.size()), n);
    const ConeMetric m = iota(p);
    const auto rep = curvature_report(m);
    EXPECT_EQ(rep.essential_count(), n);
    EXPECT_EQ(m.vertex_count(), n);
    EXPECT_TRUE(is_in_psi(m).admissible);
    EXPECT_NEAR(rep.total_deficit(), 4 * std::numbers::pi, 1e-9);
  }
}

TEST(IotaProperty, AreaMatchesHull) {
  Rng rng(5);
  for (int i = 0; i < 40; ++i) {
    const int n = std::uniform_int_distribution<int>(4, 12)(rng);
    const Polyhedron p = canonicalize_polyhedron(random_sphere_points(n, rng));
    const double ref = facet_area_sum(p);
    EXPECT_NEAR(iota(p).total_area(), ref, 1e-9 * ref);
    EXPECT_NEAR(surface_area(p), ref, 1e-9 * ref);
  }
}

TEST(IotaProperty, EdgeLengthsAreEuclidean) {
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    const Polyhedron p = canonicalize_polyhedron(random_sphere_points(9, rng));
    const ConeMetric m = iota(p);
    for (const auto& [key, len] : m.length_map()) EXPECT_NEAR(len, (p.points[key.i] - p.points[key.j]).norm(), 1e-12);
  }
}

TEST(IotaProperty, InvariantUnderRigidMotionAndOrder) {
  Rng rng(3);
  const auto pts = random_sphere_points(8, rng);
  const Eigen::Matrix3d rot = Eigen::AngleAxisd(0.7, Vec3(1, 2, 3).normalized()).toRotationMatrix();
  std::vector<Vec3> moved;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) moved.push_back(rot * *it + Vec3(4, -1, 2));
  const auto a = curvature_report(iota(canonicalize_polyhedron(pts))).sorted_essential_deficits();
  const auto b = curvature_report(iota(canonicalize_polyhedron(moved))).sorted_essential_deficits();
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-9);
}

TEST(IotaProperty, CanonicalizeIsIdempotent) {
  Rng rng(4);
  const Polyhedron p = canonicalize_polyhedron(random_sphere_points(10, rng));
  const Polyhedron q = canonicalize_polyhedron(p.points);
  ASSERT_EQ(p.points.size(), q.points.size());
  for (std::size_t i = 0; i < p.points.size(); ++i) EXPECT_EQ(p.points[i], q.points[i]);
}
