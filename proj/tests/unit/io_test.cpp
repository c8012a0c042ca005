#include "alexandrov/curvature.hpp"
#include "alexandrov/error.hpp"
#include "alexandrov/io.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <limits>

using namespace alexandrov;

namespace {

ErrorCode parse_error(const std::string& text) {
  try {
    (void)parse_metric_json(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorCode::NonManifold;
}

const char* kTetra = R"({"vertex_count": 4, "triangles": [[0, 2, 1], [0, 1, 3], [0, 3, 2], [1, 2, 3]],
  "lengths": {"0-1": 1, "0-2": 1, "0-3": 1, "1-2": 1, "1-3": 1, "2-3": 1}})";

}  // namespace

TEST(FormatNumber, SeventeenDigitsRoundTrip) {
  EXPECT_EQ(format_number(1.0), "1.0");
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  Rng rng(3);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng);
    EXPECT_EQ(std::strtod(format_number(x).c_str(), nullptr), x);
  }
}

TEST(MetricJson, ParsesTetrahedron) {
  const ConeMetric m = parse_metric_json(kTetra);
  EXPECT_EQ(m.vertex_count(), 4);
  EXPECT_EQ(curvature_report(m).essential_count(), 4);
}

TEST(MetricJson, RejectsMalformedDocuments) {
  EXPECT_EQ(parse_error("{"), ErrorCode::InvalidInput);
  EXPECT_EQ(parse_error(R"({"vertex_count": 4, "triangles": [], "lengths": {}, "extra": 1})"), ErrorCode::InvalidInput);
  EXPECT_EQ(parse_error(R"({"vertex_count": 4, "triangles": []})"), ErrorCode::InvalidInput);
  EXPECT_EQ(parse_error(R"({"vertex_count": 4, "triangles": [[0, 1, 2]], "lengths": {"1-0": 1}})"),
            ErrorCode::InvalidInput);
  EXPECT_EQ(parse_error(R"({"vertex_count": 4, "triangles": [[0, 1, 9]], "lengths": {}})"), ErrorCode::InvalidInput);
  EXPECT_EQ(parse_error(R"({"vertex_count": 4, "triangles": [[0, 1, 2]], "lengths": {"0-1": -1}})"),
            ErrorCode::InvalidInput);
  EXPECT_EQ(parse_error(R"({"vertex_count": 4, "triangles": [[0, 1, 2]], "lengths": {"a-b": 1}})"),
            ErrorCode::InvalidInput);
  std::string missing = kTetra;
  missing.replace(missing.find(", \"2-3\": 1"), 10, "");
  EXPECT_EQ(parse_error(missing), ErrorCode::MissingLength);
}

TEST(MetricJson, RoundTripIsByteStable) {
  for (const auto& m : fixtures::corpus(10)) {
    const std::string once = emit_metric_json(m);
    const ConeMetric back = parse_metric_json(once);
    EXPECT_EQ(emit_metric_json(back), once);
  }
}

TEST(MetricJson, RoundTripPreservesLengthsExactly) {
  const ConeMetric m = fixtures::corpus(1, 5).back();
  const ConeMetric back = parse_metric_json(emit_metric_json(m));
  EXPECT_EQ(back.length_map(), m.length_map());
}

TEST(MetricJson, NonSimplicialMetricsAreSplit) {
  Rng rng(9);
  for (int i = 0; i < 20; ++i) {
    const ConeMetric m = random_four_vertex_metric(rng);
    const ConeMetric s = make_simplicial(m);
    EXPECT_TRUE(is_simplicial(s));
    const auto a = curvature_report(m).sorted_essential_deficits(), b = curvature_report(s).sorted_essential_deficits();
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_NEAR(a[k], b[k], 1e-9);
    const ConeMetric back = parse_metric_json(emit_metric_json(m));
    EXPECT_NEAR(back.total_area(), m.total_area(), 1e-9);
  }
}

TEST(PointsJson, RoundTrip) {
  const std::vector<Vec3> pts{{0.1, -2, 3e-7}, {1, 2, 3}};
  const std::string text = emit_points_json(pts);
  EXPECT_EQ(parse_points_json(text), pts);
  EXPECT_EQ(emit_points_json(parse_points_json(text)), text);
  EXPECT_THROW((void)parse_points_json(R"({"points": [[1, 2]]})"), Error);
  EXPECT_THROW((void)parse_points_json(R"({"points": [], "name": "x"})"), Error);
}

TEST(GluingJson, RoundTrip) {
  const PolygonGluing g = rectangle_gluing();
  const std::string text = emit_gluing_json(g);
  const PolygonGluing back = parse_gluing_json(text);
  EXPECT_EQ(emit_gluing_json(back), text);
  EXPECT_EQ(back.pairs.size(), g.pairs.size());
  EXPECT_TRUE(parse_gluing_json(R"({"polygon": [[0, 0], [1, 0], [0, 1]], "scheme": "double"})").doubled);
  EXPECT_THROW((void)parse_gluing_json(R"({"polygon": [[0, 0]], "scheme": "triple"})"), Error);
}

TEST(Obj, OneBasedFaces) {
  EXPECT_EQ(emit_obj({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 2}}),
            "v 0.0 0.0 0.0\nv 1.0 0.0 0.0\nv 0.0 1.0 0.0\nf 1 2 3\n");
}
