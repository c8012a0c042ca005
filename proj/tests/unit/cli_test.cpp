#include "cli.hpp"

#include "alexandrov/curvature.hpp"
#include "alexandrov/io.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <sstream>

using namespace alexandrov;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("alexandrov_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    write_file(path("cube.points.json"), emit_points_json(fixtures::cube_points()));
    write_file(path("cube.metric.json"), emit_metric_json(fixtures::cube()));
    write_file(path("square.metric.json"), emit_metric_json(fixtures::doubled_square()));
    write_file(path("tetra.metric.json"), emit_metric_json(fixtures::regular_tetrahedron()));
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

int count_prefix(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  int n = 0;
  for (std::string line; std::getline(in, line);) n += line.rfind(prefix, 0) == 0 ? 1 : 0;
  return n;
}

}  // namespace

TEST_F(CliTest, ValidateCube) {
  const Result r = run({"validate", path("cube.metric.json")});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("essential vertices 8"), std::string::npos);
  EXPECT_NE(r.out.find("admissible yes"), std::string::npos);
}

TEST_F(CliTest, ValidateRejectsInadmissible) {
  write_file(path("star.json"), emit_metric_json(star_gluing(7)));
  EXPECT_EQ(run({"validate", path("star.json")}).code, cli::kValidation);
}

TEST_F(CliTest, IotaWritesMetricWithEightCorners) {
  const Result r = run({"iota", path("cube.points.json"), "--out", path("out.json"), "--obj", path("cube.obj")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const ConeMetric m = parse_metric_json(read_file(path("out.json")));
  EXPECT_EQ(curvature_report(m).essential_count(), 8);
  const std::string obj = read_file(path("cube.obj"));
  EXPECT_EQ(count_prefix(obj, "v "), 8);
  EXPECT_EQ(count_prefix(obj, "f "), 6);
}

TEST_F(CliTest, Embed4WritesTetrahedronObj) {
  const Result r = run({"embed4", path("tetra.metric.json"), "--obj", path("out.obj")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const std::string obj = read_file(path("out.obj"));
  EXPECT_EQ(count_prefix(obj, "v "), 4);
  EXPECT_EQ(count_prefix(obj, "f "), 4);
  EXPECT_NE(r.out.find("\"max_residual\""), std::string::npos);
}

TEST_F(CliTest, Embed4RejectsCube) {
  EXPECT_EQ(run({"embed4", path("cube.metric.json")}).code, cli::kValidation);
}

TEST_F(CliTest, IsometricVerdicts) {
  const Result same = run({"isometric", path("cube.metric.json"), path("cube.metric.json")});
  EXPECT_EQ(same.code, cli::kOk);
  EXPECT_EQ(same.out.rfind("consistent", 0), 0u);
  const Result diff = run({"isometric", path("cube.metric.json"), path("square.metric.json")});
  EXPECT_EQ(diff.code, cli::kDistinct);
  EXPECT_EQ(diff.out.rfind("distinct", 0), 0u);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"geodesic", path("cube.metric.json"), "--from", "0"}).code, cli::kUsage);
  EXPECT_EQ(run({"--tol-angle", "-1", "validate", path("cube.metric.json")}).code, cli::kUsage);
  const Result help = run({"--help"});
  EXPECT_EQ(help.code, cli::kOk);
  EXPECT_NE(help.out.find("embed4"), std::string::npos);
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(run({"validate", path("missing.json")}).code, cli::kValidation);
  write_file(path("extra.json"), R"({"vertex_count": 3, "triangles": [], "lengths": {}, "colour": "red"})");
  const Result r = run({"validate", path("extra.json")});
  EXPECT_EQ(r.code, cli::kValidation);
  EXPECT_NE(r.err.find("colour"), std::string::npos);
  EXPECT_EQ(run({"geodesic", path("cube.metric.json"), "--from", "0", "--to", "99"}).code, cli::kValidation);
}

TEST_F(CliTest, BudgetFailureIsNumeric) {
  EXPECT_EQ(run({"geodesic", path("cube.metric.json"), "--from", "0", "--to", "7", "--budget", "1"}).code,
            cli::kNumeric);
}

TEST_F(CliTest, GeodesicWithStrip) {
  const Result r = run({"geodesic", path("cube.metric.json"), "--from", "0", "--to", "7", "--svg", path("p.svg")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("\"length\": 2.236067977499789"), std::string::npos);
  EXPECT_NE(read_file(path("p.svg")).find("<polyline"), std::string::npos);
}

TEST_F(CliTest, PatchThenExcise) {
  ASSERT_EQ(run({"patch", path("square.metric.json"), "--v", "0", "--w", "1", "--alpha", "1.5707963267948966",
                 "--beta", "0.5235987755982988", "--out", path("patched.json")})
                .code,
            cli::kOk);
  const ConeMetric patched = parse_metric_json(read_file(path("patched.json")));
  EXPECT_EQ(curvature_report(patched).essential_count(), 4);
  const std::string apex = std::to_string(patched.vertex_count() - 1);
  const Result r = run({"excise", path("patched.json"), "--apex", apex, "--v", "0", "--w", "1", "--out",
                        path("back.json")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(run({"isometric", path("back.json"), path("square.metric.json")}).code, cli::kOk);
}

TEST_F(CliTest, BuildPresetsAndDouble) {
  const Result pf = run({"build", "--preset", "paper-figure"});
  ASSERT_EQ(pf.code, cli::kOk) << pf.err;
  EXPECT_EQ(curvature_report(parse_metric_json(pf.out)).essential_count(), 4);
  const Result star = run({"build", "--preset", "star", "--k", "5"});
  ASSERT_EQ(star.code, cli::kOk);
  write_file(path("g.json"), R"({"polygon": [[0, 0], [2, 0], [2, 1], [0, 1]], "scheme": "double"})");
  const Result g = run({"build", path("g.json")});
  const Result d = run({"double", path("g.json")});
  ASSERT_EQ(g.code, cli::kOk);
  EXPECT_EQ(g.out, d.out);
  EXPECT_EQ(run({"double", "--regular", "6"}).code, cli::kOk);
  EXPECT_EQ(run({"build"}).code, cli::kUsage);
}

TEST_F(CliTest, ReportAndRetriangulate) {
  const Result rep = run({"report", path("cube.metric.json")});
  ASSERT_EQ(rep.code, cli::kOk);
  EXPECT_NE(rep.out.find("\"essential_count\": 8"), std::string::npos);
  const Result rt = run({"retriangulate", path("square.metric.json"), "--svg", path("net.svg")});
  ASSERT_EQ(rt.code, cli::kOk);
  EXPECT_EQ(parse_metric_json(rt.out).edge_count(), 6);
  EXPECT_NE(read_file(path("net.svg")).find("<svg"), std::string::npos);
}

TEST_F(CliTest, ExportFormats) {
  for (const char* fmt : {"json", "obj", "svg"}) {
    const Result r = run({"export", path("cube.metric.json"), "--format", fmt});
    EXPECT_EQ(r.code, cli::kOk) << fmt;
    EXPECT_FALSE(r.out.empty());
  }
  EXPECT_EQ(count_prefix(run({"export", path("cube.metric.json"), "--format", "obj"}).out, "f "), 12);
}

TEST_F(CliTest, FixedSeedIsReproducible) {
  const Result a = run({"iota", "--random", "9", "--seed", "5"});
  const Result b = run({"iota", "--random", "9", "--seed", "5"});
  const Result c = run({"iota", "--random", "9", "--seed", "6"});
  ASSERT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
}
