// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.

#include "cli.hpp"

#include "alexandrov/correspondence.hpp"
#include "alexandrov/curvature.hpp"
#include "alexandrov/error.hpp"
#include "alexandrov/geodesics.hpp"
#include "alexandrov/io.hpp"
#include "alexandrov/retriangulation.hpp"
#include "alexandrov/surgery.hpp"

#include "cases.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>
#include <string>

using namespace alexandrov;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::vector<ConeMetric> corpus() {
  std::vector<ConeMetric> out = fixtures::corpus(100, kSeed);
  Rng rng(kSeed + 1);
  for (int i = 0; i < 10; ++i) out.push_back(iota(canonicalize_polyhedron(random_tetrahedron(rng, i % 2 == 1))));
  for (int k = 3; k <= 10; ++k) out.push_back(double_polygon(random_convex_polygon(k, rng)));
  return out;
}

std::array<double, 6> sorted_pair_distances(const std::vector<Vec3>& p) {
  std::array<double, 6> d{};
  int k = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) d[k++] = (p[i] - p[j]).norm();
  }
  std::sort(d.begin(), d.end());
  return d;
}

Outcome gauss_bonnet() {
  double worst = 0.0;
  const auto metrics = corpus();
  for (const auto& m : metrics) {
    worst = std::max(worst, std::abs(curvature_report(m).total_deficit() - 4 * kPi));
  }
  return {worst <= 1e-9, std::to_string(metrics.size()) + " metrics, max |sum of deficits - 4pi| = " + num(worst)};
}

Outcome vertex_count_law() {
  Rng rng(kSeed + 2);
  int ok = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = std::uniform_int_distribution<int>(4, 12)(rng);
    const Polyhedron p = canonicalize_polyhedron(random_sphere_points(n, rng));
    const int essential = curvature_report(iota(p)).essential_count();
    ok += essential == static_cast<int>(p.points.size()) && essential == n ? 1 : 0;
  }
  return {ok == 100, std::to_string(ok) + "/100 point sets"};
}

Outcome geodesic_exactness() {
  const double cube_ref = oracle::unfolding_distance(oracle::unit_cube(), 0, 7);
  const double square_ref = oracle::unfolding_distance(oracle::doubled(fixtures::unit_square()), 0, 2);
  const double cube = shortest_geodesic(fixtures::cube(), 0, 7).length;
  const double square = shortest_geodesic(fixtures::doubled_square(), 0, 2).length;
  const double err = std::max({std::abs(cube - cube_ref), std::abs(square - square_ref),
                               std::abs(cube_ref - std::sqrt(5.0)), std::abs(square_ref - std::sqrt(2.0))});
  return {err <= 1e-9, "cube " + format_number(cube) + ", doubled square " + format_number(square) +
                           ", max error " + num(err)};
}

Outcome vertex_avoidance() {
  int paths = 0, violations = 0;
  for (const auto& m : corpus()) {
    if (!is_in_psi(m).admissible) continue;
    const auto rep = curvature_report(m);
    const auto ess = rep.essential_vertices();
    const Triangulation& t = m.triangulation();
    for (std::size_t i = 0; i < ess.size(); ++i) {
      for (std::size_t j = i + 1; j < ess.size(); ++j) {
        const GeodesicPath p = shortest_geodesic(m, ess[i], ess[j]);
        ++paths;
        for (int v : p.through_vertices) violations += rep.vertices[v].essential ? 1 : 0;
        for (const auto& c : p.crossings) {
          const double len = m.length(c.halfedge);
          if (rep.vertices[t.tail(c.halfedge)].essential && c.t * len <= 1e-9) ++violations;
          if (rep.vertices[t.head(c.halfedge)].essential && (1 - c.t) * len <= 1e-9) ++violations;
        }
      }
    }
  }
  return {violations == 0, std::to_string(paths) + " geodesics, " + std::to_string(violations) + " incidences"};
}

Outcome edge_count_law() {
  Rng rng(kSeed + 3);
  int ok = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = std::uniform_int_distribution<int>(3, 12)(rng);
    ConeMetric m = n == 3 ? double_polygon(random_convex_polygon(3, rng))
                          : iota(canonicalize_polyhedron(random_sphere_points(n, rng)));
    m = random_subdivision(random_relabel(m, rng), std::uniform_int_distribution<int>(0, 4)(rng), rng);
    m = random_flips(m, std::uniform_int_distribution<int>(0, 6)(rng), rng);
    const auto et = retriangulate_essential(m);
    ok += et.metric.vertex_count() == n && et.metric.edge_count() == 3 * n - 6 ? 1 : 0;
  }
  return {ok == 100, std::to_string(ok) + "/100 retriangulations with E = 3n - 6"};
}

Outcome existence() {
  Rng rng(kSeed + 4);
  int ok = 0;
  double worst = 0.0;
  std::size_t max_visited = 0;
  std::map<std::string, int> failures;
  for (int i = 0; i < 220; ++i) {
    const ConeMetric m = random_four_vertex_metric(rng, i >= 200);
    try {
      const EmbeddingResult r = embed4(m);
      std::vector<Vec3> pts(r.points.begin(), r.points.end());
      const double diam = sorted_pair_distances(pts).back();
      worst = std::max(worst, r.max_residual / diam);
      max_visited = std::max(max_visited, r.triangulations_visited);
      ok += r.max_residual <= 1e-8 * diam ? 1 : 0;
    } catch (const Error& e) {
      ++failures[std::string(to_string(e.code()))];
    }
  }
  std::string detail = std::to_string(ok) + "/220 embedded, max residual/diameter " + num(worst) +
                       ", at most " + std::to_string(max_visited) + " triangulations visited";
  for (const auto& [code, count] : failures) detail += ", " + code + " x" + std::to_string(count);
  return {ok >= 200 && failures.empty(), detail};
}

Outcome uniqueness() {
  Rng rng(kSeed + 5);
  int ok = 0;
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto t = random_tetrahedron(rng, i >= 180);
    try {
      const EmbeddingResult r = embed4(iota(canonicalize_polyhedron(t)));
      const auto a = sorted_pair_distances(t);
      const auto b = sorted_pair_distances({r.points.begin(), r.points.end()});
      double rel = 0.0;
      for (int k = 0; k < 6; ++k) rel = std::max(rel, std::abs(a[k] - b[k]) / a[k]);
      worst = std::max(worst, rel);
      ok += rel <= 1e-6 ? 1 : 0;
    } catch (const Error&) {
    }
  }
  return {ok == 200, std::to_string(ok) + "/200 round trips (20 nearly flat), max relative error " + num(worst)};
}

Outcome surgery() {
  Rng rng(kSeed + 6);
  int identity = 0, flatten = 0, undo = 0;
  double worst_identity = 0.0, worst_undo = 0.0;
  std::string first_error;
  for (int i = 0; i < 50; ++i) {
    const auto c = cases::random_surgery_case(rng);
    try {
      const IsometryFingerprint base = fingerprint(c.metric);
      const double a = std::uniform_real_distribution<double>(0.1, 0.9)(rng) * c.base;
      const double d0 = fingerprint_distance(base, fingerprint(cut_and_patch(c.metric, c.v, c.w, {c.base, a, c.base - a})));
      worst_identity = std::max(worst_identity, d0);
      identity += d0 <= 1e-8 ? 1 : 0;

      const LensPatch lens = cases::flattening_patch(c, rng);
      const ConeMetric m = cut_and_patch(c.metric, c.v, c.w, lens);
      const bool kept = curvature_report(m).essential_count() == curvature_report(c.metric).essential_count();
      flatten += kept && is_in_psi(m).admissible ? 1 : 0;

      const Excision ex = excise_lens(m, m.vertex_count() - 1, c.v, c.w);
      const double d1 = fingerprint_distance(base, fingerprint(ex.metric));
      worst_undo = std::max(worst_undo, d1);
      undo += d1 <= 1e-8 ? 1 : 0;
    } catch (const Error& e) {
      if (first_error.empty()) first_error = "; case " + std::to_string(i) + ": " + e.what();
    }
  }
  return {identity == 50 && flatten == 50 && undo == 50,
          "empty lens " + std::to_string(identity) + "/50 (max " + num(worst_identity) + "), flattening lens " +
              std::to_string(flatten) + "/50, excise after patch " + std::to_string(undo) + "/50 (max " +
              num(worst_undo) + ")" + first_error};
}

Outcome minimum_three() {
  int checked = 0, violations = 0;
  auto check = [&](const ConeMetric& m) {
    if (!is_in_psi(m).admissible) return;
    ++checked;
    violations += curvature_report(m).essential_count() < 3 ? 1 : 0;
  };
  for (const auto& m : corpus()) check(m);
  Rng rng(kSeed + 7);
  for (int i = 0; i < 100; ++i) check(random_four_vertex_metric(rng, i % 5 == 0));
  for (int i = 0; i < 100; ++i) {
    check(random_subdivision(double_polygon(random_convex_polygon(3, rng)), 3, rng));
  }
  for (int i = 0; i < 20; ++i) {
    const auto c = cases::random_surgery_case(rng);
    check(cut_and_patch(c.metric, c.v, c.w, cases::flattening_patch(c, rng)));
  }
  return {violations == 0, std::to_string(checked) + " admissible metrics, " + std::to_string(violations) +
                               " with fewer than 3 essential vertices"};
}

// Every output file of a fixed command script.
std::map<std::string, std::string> scripted_run(const fs::path& dir) {
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto p = [&](const char* name) { return (dir / name).string(); };
  write_file(p("cube.points.json"), emit_points_json(fixtures::cube_points()));
  const std::vector<std::vector<std::string>> script{
      {"iota", p("cube.points.json"), "--out", p("cube.json"), "--obj", p("cube.obj")},
      {"iota", "--random", "10", "--seed", std::to_string(kSeed), "--out", p("random.json"), "--obj", p("random.obj")},
      {"report", p("random.json"), "--out", p("report.json")},
      {"geodesic", p("cube.json"), "--from", "0", "--to", "7", "--out", p("path.json"), "--svg", p("path.svg")},
      {"retriangulate", p("random.json"), "--out", p("essential.json"), "--svg", p("net.svg")},
      {"build", "--preset", "paper-figure", "--out", p("figure.json")},
      {"embed4", p("figure.json"), "--out", p("embedding.json"), "--obj", p("figure.obj")},
      {"double", "--regular", "5", "--out", p("pentagon.json")},
      {"patch", p("pentagon.json"), "--v", "0", "--w", "2", "--alpha", "0.3", "--beta", "0.2", "--out",
       p("patched.json")},
      {"excise", p("patched.json"), "--apex", "PATCHED_APEX", "--v", "0", "--w", "2", "--out", p("excised.json")},
      {"isometric", p("excised.json"), p("pentagon.json"), "--out", p("verdict.txt")},
      {"export", p("random.json"), "--format", "svg", "--out", p("random.svg")},
      {"export", p("random.json"), "--format", "obj", "--out", p("random_net.obj")},
  };
  std::ostringstream out, err;
  for (auto args : script) {
    for (auto& a : args) {
      if (a == "PATCHED_APEX") a = std::to_string(parse_metric_json(read_file(p("patched.json"))).vertex_count() - 1);
    }
    const int code = cli::run(args, out, err);
    if (code != cli::kOk) throw std::runtime_error(args[0] + " exited with " + std::to_string(code) + ": " + err.str());
  }
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) files[entry.path().filename().string()] = read_file(entry.path().string());
  files["<stdout>"] = out.str();
  files["<stderr>"] = err.str();
  return files;
}

Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / "alexandrov_acceptance";
  const auto a = scripted_run(root / "a");
  auto b = scripted_run(root / "b");
  // Diagnostics mention the directory names.
  const std::string from = (root / "b").string(), to = (root / "a").string();
  for (auto& [name, text] : b) {
    for (std::size_t pos; (pos = text.find(from)) != std::string::npos;) text.replace(pos, from.size(), to);
  }
  int identical = 0;
  std::string diff;
  for (const auto& [name, text] : a) {
    if (b.count(name) && b.at(name) == text) {
      ++identical;
    } else {
      diff += " " + name;
    }
  }
  fs::remove_all(root);
  return {identical == static_cast<int>(a.size()) && a.size() == b.size(),
          std::to_string(identical) + "/" + std::to_string(a.size()) + " JSON/OBJ/SVG outputs byte-identical" +
              (diff.empty() ? "" : "; differing:" + diff)};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
  double time_limit;  // seconds, 0 for none
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"gauss-bonnet", gauss_bonnet, 5},
      {"vertex-count-law", vertex_count_law, 30},
      {"geodesic-exactness", geodesic_exactness, 5},
      {"geodesic-vertex-avoidance", vertex_avoidance, 0},
      {"edge-count-law", edge_count_law, 0},
      {"existence-n4", existence, 60},
      {"uniqueness-n4", uniqueness, 0},
      {"surgery-bookkeeping", surgery, 0},
      {"minimum-three-vertices", minimum_three, 0},
      {"determinism", determinism, 0},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = num(secs) + " s";
    if (c.time_limit > 0) {
      timing += " (limit " + num(c.time_limit) + " s)";
      if (secs >= c.time_limit) o.pass = false;
    }
    failed += o.pass ? 0 : 1;
    std::printf("%-4s %2zu %-26s %s [%s]\n", o.pass ? "PASS" : "FAIL", i + 1, c.name, o.detail.c_str(), timing.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
