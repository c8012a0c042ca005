#include "alexandrov/correspondence.hpp"
#include "alexandrov/curvature.hpp"
#include "alexandrov/error.hpp"
#include "alexandrov/retriangulation.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace alexandrov;

namespace {

void expect_essential_triangulation(const ConeMetric& source, const EssentialTriangulation& et) {
  const auto src = curvature_report(source);
  const int n = src.essential_count();
  EXPECT_EQ(et.metric.vertex_count(), n);
  EXPECT_EQ(et.metric.edge_count(), 3 * n - 6);
  EXPECT_EQ(et.metric.face_count(), 2 * n - 4);
  const auto rep = curvature_report(et.metric);
  for (int v = 0; v < n; ++v) {
    const int s = et.source_vertex[v];
    EXPECT_TRUE(src.vertices[s].essential);
    EXPECT_NEAR(rep.vertices[v].angle_sum, src.vertices[s].angle_sum, 1e-9);
  }
  EXPECT_NEAR(et.metric.total_area(), source.total_area(), 1e-9 * source.total_area());
  ASSERT_EQ(static_cast<int>(et.provenance.size()), et.metric.edge_count());
  for (int e = 0; e < et.metric.edge_count(); ++e) {
    EXPECT_NEAR(et.provenance[e].length, et.metric.edge_length(e), 1e-9);
  }
}

}  // namespace

TEST(Retriangulate, CubeKeepsItsEightCorners) {
  const ConeMetric m = fixtures::cube();
  const auto et = retriangulate_essential(m);
  expect_essential_triangulation(m, et);
  EXPECT_EQ(et.metric.edge_count(), 18);
}

TEST(Retriangulate, DoubledSquare) {
  const ConeMetric m = fixtures::doubled_square();
  const auto et = retriangulate_essential(m);
  expect_essential_triangulation(m, et);
  EXPECT_EQ(et.metric.edge_count(), 6);
}

TEST(Retriangulate, RectangleGluingDropsTheFlatPoints) {
  const ConeMetric m = glue_polygon(rectangle_gluing());
  ASSERT_GT(m.vertex_count(), 4);
  const auto et = retriangulate_essential(m);
  expect_essential_triangulation(m, et);
  EXPECT_LT(fingerprint_distance(fingerprint(m), fingerprint(et.metric)), 1e-9);
}

TEST(Retriangulate, RejectsInadmissibleMetric) {
  try {
    (void)retriangulate_essential(star_gluing(7));
    ADD_FAILURE() << "accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAdmissible);
  }
}

TEST(Retriangulate, StarWithFlatApexes) {
  const ConeMetric m = star_gluing(6);
  const auto et = retriangulate_essential(m);
  expect_essential_triangulation(m, et);
  EXPECT_EQ(et.metric.vertex_count(), 6);
}

TEST(EdgeFlip, ConvexQuadrilateralFlips) {
  const auto et = retriangulate_essential(fixtures::doubled_square());
  int flipped = 0;
  for (int e = 0; e < et.metric.edge_count(); ++e) {
    try {
      const auto f = edge_flip(et, e);
      ++flipped;
      EXPECT_EQ(f.metric.edge_count(), 6);
      EXPECT_LT(fingerprint_distance(fingerprint(f.metric), fingerprint(et.metric)), 1e-9);
    } catch (const Error& err) {
      EXPECT_EQ(err.code(), ErrorCode::NotFlippable);
    }
  }
  EXPECT_GT(flipped, 0);
}

TEST(EdgeFlip, CubeFaceDiagonalIsNotFlippable) {
  const auto et = retriangulate_essential(fixtures::cube());
  int blocked = 0;
  for (int e = 0; e < et.metric.edge_count(); ++e) {
    try {
      (void)edge_flip(et, e);
    } catch (const Error& err) {
      EXPECT_EQ(err.code(), ErrorCode::NotFlippable);
      ++blocked;
    }
  }
  EXPECT_GT(blocked, 0);
}

TEST(RetriangulateProperty, EdgeCountLawOnPerturbedMetrics) {
  Rng rng(31);
  for (int i = 0; i < 40; ++i) {
    const int n = std::uniform_int_distribution<int>(3, 12)(rng);
    ConeMetric m = n == 3 ? double_polygon(random_convex_polygon(3, rng))
                          : iota(canonicalize_polyhedron(random_sphere_points(n, rng)));
    m = random_subdivision(random_relabel(m, rng), std::uniform_int_distribution<int>(0, 4)(rng), rng);
    m = random_flips(m, std::uniform_int_distribution<int>(0, 6)(rng), rng);
    const auto et = retriangulate_essential(m);
    expect_essential_triangulation(m, et);
  }
}

TEST(RetriangulateProperty, DistancesArePreserved) {
  Rng rng(37);
  for (int i = 0; i < 10; ++i) {
    ConeMetric m = iota(canonicalize_polyhedron(random_sphere_points(6, rng)));
    m = random_subdivision(m, 3, rng);
    const auto et = retriangulate_essential(m);
    EXPECT_LT(fingerprint_distance(fingerprint(m), fingerprint(et.metric)), 1e-8);
  }
}
