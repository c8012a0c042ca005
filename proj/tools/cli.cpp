#include "cli.hpp"

#include "alexandrov/builders.hpp"
#include "alexandrov/correspondence.hpp"
#include "alexandrov/curvature.hpp"
#include "alexandrov/error.hpp"
#include "alexandrov/geodesics.hpp"
#include "alexandrov/io.hpp"
#include "alexandrov/polyhedron.hpp"
#include "alexandrov/retriangulation.hpp"
#include "alexandrov/sampling.hpp"
#include "alexandrov/surgery.hpp"
#include "alexandrov/svg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>

namespace alexandrov::cli {

namespace {

struct RunConfig {
  double tol_angle = 1e-9;
  std::size_t budget = 1'000'000;
  std::size_t flip_budget = 10'000;
  std::uint64_t seed = 1;
  std::string out;
  std::string obj;
  std::string svg;

  [[nodiscard]] Tolerances tolerances() const {
    Tolerances t;
    t.angle = tol_angle;
    return t;
  }
  [[nodiscard]] GeodesicOptions geodesic() const { return {budget, tolerances()}; }
};

class Runner {
 public:
  Runner(const RunConfig& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

  void result(const std::string& text) const {
    if (cfg_.out.empty()) {
      out_ << text;
    } else {
      write_file(cfg_.out, text);
    }
  }

  void side_file(const std::string& path, const std::string& text, const char* what) const {
    if (path.empty()) return;
    write_file(path, text);
    err_ << "wrote " << what << " to " << path << "\n";
  }

  [[nodiscard]] ConeMetric metric(const std::string& path) const {
    return parse_metric_json(read_file(path), cfg_.tolerances());
  }

  const RunConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
};

std::vector<std::vector<int>> tetra_faces(double signed_volume) {
  std::vector<std::vector<int>> f{{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}};
  if (signed_volume < 0) {
    for (auto& t : f) std::reverse(t.begin(), t.end());
  }
  return f;
}

std::vector<std::vector<int>> facet_lists(const Polyhedron& p) {
  std::vector<std::vector<int>> out;
  for (const auto& f : polyhedron_facets(p)) out.push_back(f.vertices);
  return out;
}

std::string net_obj(const ConeMetric& metric) {
  const NetLayout net = unfold_net(metric);
  std::vector<Vec3> pts;
  std::vector<std::vector<int>> faces;
  for (const auto& t : net.triangles) {
    std::vector<int> f;
    for (const auto& p : t) {
      f.push_back(static_cast<int>(pts.size()));
      pts.emplace_back(p.x(), p.y(), 0.0);
    }
    faces.push_back(f);
  }
  return emit_obj(pts, faces);
}

void check_vertex(const ConeMetric& m, int v, const char* name) {
  if (v < 0 || v >= m.vertex_count()) {
    throw Error(ErrorCode::InvalidInput, std::string(name) + " " + std::to_string(v) + " is not a vertex");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polyhedral metrics on the sphere and convex polyhedra", "alexandrov"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--tol-angle", cfg.tol_angle, "angle-sum slack separating essential vertices")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "unfolding windows per geodesic query")->check(CLI::PositiveNumber);
  app.add_option("--flip-budget", cfg.flip_budget, "triangulations visited by embed4")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for random generators");
  app.add_option("--out", cfg.out, "write the main result here instead of stdout");
  app.add_option("--obj", cfg.obj, "also write an OBJ file");
  app.add_option("--svg", cfg.svg, "also write an SVG drawing");

  std::string file, file_b, preset, format = "svg";
  int from = -1, to = -1, v = -1, w = -1, apex = -1, k = 5, random_n = 0, regular = 0;
  double side = 1.0, radius = 1.0, tol = 1e-6;
  std::optional<double> a, b, alpha, beta;

  auto* validate = app.add_subcommand("validate", "check a metric and print its curvature summary");
  validate->add_option("metric", file)->required();
  auto* report = app.add_subcommand("report", "curvature report as JSON");
  report->add_option("metric", file)->required();
  auto* build = app.add_subcommand("build", "metric from a polygon gluing or a preset");
  build->add_option("gluing", file);
  build->add_option("--preset", preset)->check(CLI::IsMember({"paper-figure", "star"}));
  build->add_option("--k", k, "ring size for the star preset")->check(CLI::Range(3, 1000));
  build->add_option("--side", side)->check(CLI::PositiveNumber);
  auto* dbl = app.add_subcommand("double", "doubled convex polygon");
  dbl->add_option("polygon", file, "gluing document with scheme \"double\"");
  dbl->add_option("--regular", regular, "regular polygon with this many corners")->check(CLI::Range(3, 100000));
  dbl->add_option("--radius", radius)->check(CLI::PositiveNumber);
  auto* iota_cmd = app.add_subcommand("iota", "intrinsic metric of a convex polyhedron");
  iota_cmd->add_option("points", file);
  iota_cmd->add_option("--random", random_n, "use this many random points on the unit sphere")
      ->check(CLI::Range(4, 100000));
  auto* geodesic = app.add_subcommand("geodesic", "shortest path between two vertices");
  geodesic->add_option("metric", file)->required();
  geodesic->add_option("--from", from)->required();
  geodesic->add_option("--to", to)->required();
  auto* retri = app.add_subcommand("retriangulate", "triangulation on the essential vertices");
  retri->add_option("metric", file)->required();
  auto* patch = app.add_subcommand("patch", "cut along the geodesic v-w and glue in a lens");
  patch->add_option("metric", file)->required();
  patch->add_option("--v", v)->required();
  patch->add_option("--w", w)->required();
  auto* opt_a = patch->add_option("--a", a, "lateral side at v")->check(CLI::PositiveNumber);
  auto* opt_b = patch->add_option("--b", b, "lateral side at w")->check(CLI::PositiveNumber);
  auto* opt_alpha = patch->add_option("--alpha", alpha, "base angle at v")->check(CLI::NonNegativeNumber);
  auto* opt_beta = patch->add_option("--beta", beta, "base angle at w")->check(CLI::NonNegativeNumber);
  opt_a->needs(opt_b)->excludes(opt_alpha)->excludes(opt_beta);
  opt_b->needs(opt_a);
  opt_alpha->needs(opt_beta);
  opt_beta->needs(opt_alpha);
  auto* excise = app.add_subcommand("excise", "remove the lens with the given apex");
  excise->add_option("metric", file)->required();
  excise->add_option("--apex", apex)->required();
  excise->add_option("--v", v)->required();
  excise->add_option("--w", w)->required();
  auto* embed = app.add_subcommand("embed4", "tetrahedron realizing a four-vertex metric");
  embed->add_option("metric", file)->required();
  auto* iso = app.add_subcommand("isometric", "compare the isometry fingerprints of two metrics");
  iso->add_option("a", file)->required();
  iso->add_option("b", file_b)->required();
  iso->add_option("--tol", tol)->check(CLI::PositiveNumber);
  auto* exp = app.add_subcommand("export", "net drawing or other formats of a metric");
  exp->add_option("metric", file)->required();
  exp->add_option("--format", format)->check(CLI::IsMember({"json", "obj", "svg"}));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  const Runner r(cfg, out, err);
  try {
    if (validate->parsed()) {
      const ConeMetric m = r.metric(file);
      const CurvatureReport rep = curvature_report(m, cfg.tolerances());
      const PsiCheck psi = is_in_psi(m, cfg.tolerances());
      out << "vertices " << m.vertex_count() << ", edges " << m.edge_count() << ", faces " << m.face_count() << "\n";
      out << "essential vertices " << rep.essential_count() << "\n";
      out << "total deficit " << format_number(rep.total_deficit()) << " (4pi error "
          << format_number(rep.total_deficit() - 2.0 * kTwoPi) << ")\n";
      out << "area " << format_number(m.total_area()) << "\n";
      out << "admissible " << (psi.admissible ? "yes" : "no") << "\n";
      if (!psi.admissible) {
        err << "vertex " << *psi.offender << " has angle sum " << format_number(psi.offender_angle) << " > 2pi\n";
        return kValidation;
      }
      return kOk;
    }
    if (report->parsed()) {
      r.result(emit_report_json(r.metric(file), cfg.tolerances()));
      return kOk;
    }
    if (build->parsed()) {
      ConeMetric m;
      if (preset == "paper-figure") {
        m = glue_polygon(rectangle_gluing(), cfg.tolerances());
      } else if (preset == "star") {
        m = star_gluing(k, side, cfg.tolerances());
      } else if (!file.empty()) {
        const PolygonGluing g = parse_gluing_json(read_file(file));
        m = g.doubled ? double_polygon(g.polygon, cfg.tolerances()) : glue_polygon(g, cfg.tolerances());
      } else {
        throw CLI::ValidationError("build", "give a gluing file or --preset");
      }
      r.result(emit_metric_json(m));
      return kOk;
    }
    if (dbl->parsed()) {
      std::vector<Vec2> poly;
      if (regular > 0) {
        for (int i = 0; i < regular; ++i) {
          const double t = kTwoPi * i / regular;
          poly.emplace_back(radius * std::cos(t), radius * std::sin(t));
        }
      } else if (!file.empty()) {
        const PolygonGluing g = parse_gluing_json(read_file(file));
        if (!g.doubled) throw Error(ErrorCode::InvalidInput, "double expects scheme \"double\"");
        poly = g.polygon;
      } else {
        throw CLI::ValidationError("double", "give a polygon file or --regular");
      }
      r.result(emit_metric_json(double_polygon(poly, cfg.tolerances())));
      return kOk;
    }
    if (iota_cmd->parsed()) {
      std::vector<Vec3> pts;
      if (random_n > 0) {
        Rng rng(cfg.seed);
        pts = random_sphere_points(random_n, rng);
      } else if (!file.empty()) {
        pts = parse_points_json(read_file(file));
      } else {
        throw CLI::ValidationError("iota", "give a points file or --random");
      }
      const Polyhedron poly = canonicalize_polyhedron(pts);
      const ConeMetric m = iota(poly, cfg.tolerances());
      r.side_file(cfg.obj, emit_obj(poly.points, facet_lists(poly)), "hull");
      r.result(emit_metric_json(m));
      return kOk;
    }
    if (geodesic->parsed()) {
      const ConeMetric m = r.metric(file);
      check_vertex(m, from, "--from");
      check_vertex(m, to, "--to");
      const GeodesicPath path = shortest_geodesic(m, from, to, cfg.geodesic());
      if (!cfg.svg.empty()) r.side_file(cfg.svg, export_svg_path(m, path).text, "strip");
      r.result(emit_path_json(path));
      return kOk;
    }
    if (retri->parsed()) {
      const EssentialTriangulation et = retriangulate_essential(r.metric(file), cfg.tolerances());
      if (!cfg.svg.empty()) {
        const SvgDocument doc = export_svg_net(et.metric);
        if (doc.overlap_warning) err << "warning: net overlaps itself\n";
        r.side_file(cfg.svg, doc.text, "net");
      }
      r.result(emit_metric_json(et.metric));
      return kOk;
    }
    if (patch->parsed()) {
      const ConeMetric m = r.metric(file);
      check_vertex(m, v, "--v");
      check_vertex(m, w, "--w");
      SurgeryOptions opts;
      opts.geodesic = cfg.geodesic();
      const double base = shortest_geodesic(m, v, w, opts.geodesic).length;
      LensPatch lens;
      if (a) {
        lens = {base, *a, *b};
      } else if (alpha) {
        lens = LensPatch::from_angles(base, *alpha, *beta);
      } else {
        throw CLI::ValidationError("patch", "give --a/--b or --alpha/--beta");
      }
      const ConeMetric res = cut_and_patch(m, v, w, lens, opts);
      if (!lens.degenerate()) err << "apex vertex " << res.vertex_count() - 1 << "\n";
      r.result(emit_metric_json(res));
      return kOk;
    }
    if (excise->parsed()) {
      const ConeMetric m = r.metric(file);
      check_vertex(m, apex, "--apex");
      check_vertex(m, v, "--v");
      check_vertex(m, w, "--w");
      SurgeryOptions opts;
      opts.geodesic = cfg.geodesic();
      const Excision ex = excise_lens(m, apex, v, w, opts);
      err << "lens a " << format_number(ex.patch.a) << " b " << format_number(ex.patch.b) << " base "
          << format_number(ex.patch.base) << "; v is now " << ex.v << ", w is now " << ex.w << "\n";
      r.result(emit_metric_json(ex.metric));
      return kOk;
    }
    if (embed->parsed()) {
      EmbedOptions opts;
      opts.flip_budget = cfg.flip_budget;
      opts.geodesic = cfg.geodesic();
      const EmbeddingResult res = embed4(r.metric(file), opts);
      r.side_file(cfg.obj, emit_obj({res.points.begin(), res.points.end()}, tetra_faces(res.signed_volume)),
                  "tetrahedron");
      r.result(emit_embedding_json(res));
      return kOk;
    }
    if (iso->parsed()) {
      const IsometryFingerprint fa = fingerprint(r.metric(file), cfg.geodesic());
      const IsometryFingerprint fb = fingerprint(r.metric(file_b), cfg.geodesic());
      const Verdict verdict = fingerprints_match(fa, fb, tol) ? Verdict::Consistent : Verdict::Distinct;
      std::string text = std::string(to_string(verdict)) + "\n";
      text += "difference " + format_number(fingerprint_distance(fa, fb)) + "\n";
      text += "fingerprint " + file + "\n" + emit_fingerprint_json(fa);
      text += "fingerprint " + file_b + "\n" + emit_fingerprint_json(fb);
      r.result(text);
      return verdict == Verdict::Consistent ? kOk : kDistinct;
    }
    if (exp->parsed()) {
      const ConeMetric m = r.metric(file);
      if (format == "json") {
        r.result(emit_metric_json(m));
      } else if (format == "obj") {
        r.result(net_obj(m));
      } else {
        const SvgDocument doc = export_svg_net(m);
        if (doc.overlap_warning) err << "warning: net overlaps itself\n";
        r.result(doc.text);
      }
      return kOk;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_validation_error(e.code()) ? kValidation : kNumeric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumeric;
  }
  return kUsage;
}

}  // namespace alexandrov::cli
