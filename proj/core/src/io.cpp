#include "alexandrov/io.hpp"

#include "alexandrov/curvature.hpp"
#include "alexandrov/error.hpp"
#include "alexandrov/mesh_editor.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace alexandrov {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

void write_scalar(std::ostream& os, const Json& j) {
  if (j.is_number_float()) {
    os << format_number(j.get<double>());
  } else {
    os << j.dump();
  }
}

// Pretty printer with arrays of scalars kept on one line.
void write(std::ostream& os, const Json& j, int indent) {
  const std::string pad(indent + 2, ' '), close(indent, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) os << ",\n";
      first = false;
      os << pad << Json(key).dump() << ": ";
      write(os, value, indent + 2);
    }
    os << "\n" << close << "}";
  } else if (j.is_array()) {
    if (std::all_of(j.begin(), j.end(), is_scalar)) {
      os << "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ", ";
        write_scalar(os, j[i]);
      }
      os << "]";
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) os << ",\n";
      os << pad;
      write(os, j[i], indent + 2);
    }
    os << "\n" << close << "]";
  } else {
    write_scalar(os, j);
  }
}

std::string dump(const Json& j) {
  std::ostringstream os;
  write(os, j, 0);
  os << "\n";
  return os.str();
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    invalid(std::string("malformed JSON: ") + e.what());
  }
}

void require_keys(const Json& j, std::initializer_list<const char*> allowed, std::initializer_list<const char*> required) {
  if (!j.is_object()) invalid("top-level value must be an object");
  for (const auto& [key, value] : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return key == k; })) {
      invalid("unknown key \"" + key + "\"");
    }
  }
  for (const char* k : required) {
    if (!j.contains(k)) invalid(std::string("missing key \"") + k + "\"");
  }
}

double number(const Json& j, const std::string& what) {
  if (!j.is_number()) invalid(what + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) invalid(what + " must be finite");
  return x;
}

int integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) invalid(what + " must be an integer");
  const auto x = j.get<long long>();
  if (x < 0 || x > 100'000'000) invalid(what + " out of range");
  return static_cast<int>(x);
}

std::vector<double> number_array(const Json& j, std::size_t size, const std::string& what) {
  if (!j.is_array() || j.size() != size) invalid(what + " must be an array of " + std::to_string(size) + " numbers");
  std::vector<double> out;
  for (const auto& x : j) out.push_back(number(x, what));
  return out;
}

int parse_index(std::string_view s, const std::string& key) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || v < 0) invalid("bad length key \"" + key + "\"");
  return v;
}

Json points_array(const std::vector<Vec3>& points) {
  Json arr = Json::array();
  for (const auto& p : points) arr.push_back({p.x(), p.y(), p.z()});
  return arr;
}

}  // namespace

std::string format_number(double x) {
  if (!std::isfinite(x)) return x != x ? "NaN" : (x > 0 ? "Infinity" : "-Infinity");
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

bool is_simplicial(const ConeMetric& metric) {
  const Triangulation& tri = metric.triangulation();
  std::set<EdgeKey> pairs;
  for (int e = 0; e < tri.edge_count(); ++e) {
    const int h = tri.edge_halfedge(e);
    if (tri.tail(h) == tri.head(h) || !pairs.insert(EdgeKey(tri.tail(h), tri.head(h))).second) return false;
  }
  return true;
}

ConeMetric make_simplicial(const ConeMetric& metric) {
  ConeMetric cur = metric;
  while (!is_simplicial(cur)) {
    const Triangulation& tri = cur.triangulation();
    std::set<EdgeKey> pairs;
    MeshEditor ed(cur);
    for (int e = 0; e < tri.edge_count(); ++e) {
      const int h = tri.edge_halfedge(e);
      if (tri.tail(h) == tri.head(h) || !pairs.insert(EdgeKey(tri.tail(h), tri.head(h))).second) {
        ed.split_edge(h, 0.5);
        break;
      }
    }
    cur = ed.to_metric();
  }
  return cur;
}

ConeMetric parse_metric_json(const std::string& text, const Tolerances& tol) {
  const Json j = parse(text);
  require_keys(j, {"vertex_count", "triangles", "lengths"}, {"vertex_count", "triangles", "lengths"});
  const int n = integer(j["vertex_count"], "vertex_count");
  if (!j["triangles"].is_array()) invalid("triangles must be an array");
  std::vector<Face> faces;
  for (const auto& t : j["triangles"]) {
    if (!t.is_array() || t.size() != 3) invalid("each triangle must list 3 vertices");
    Face f{};
    for (int k = 0; k < 3; ++k) {
      f[k] = integer(t[k], "triangle vertex");
      if (f[k] >= n) invalid("triangle vertex " + std::to_string(f[k]) + " exceeds vertex_count");
    }
    faces.push_back(f);
  }
  if (!j["lengths"].is_object()) invalid("lengths must be an object");
  EdgeLengthMap lengths;
  for (const auto& [key, value] : j["lengths"].items()) {
    const auto dash = key.find('-');
    if (dash == std::string::npos) invalid("bad length key \"" + key + "\"");
    const int a = parse_index(std::string_view(key).substr(0, dash), key);
    const int b = parse_index(std::string_view(key).substr(dash + 1), key);
    if (a >= b) invalid("length key \"" + key + "\" must have i < j");
    if (b >= n) invalid("length key \"" + key + "\" exceeds vertex_count");
    const double len = number(value, "length " + key);
    if (!(len > 0.0)) invalid("length " + key + " must be positive");
    lengths[EdgeKey(a, b)] = len;
  }
  return build_cone_metric(n, std::move(faces), lengths, tol);
}

std::string emit_metric_json(const ConeMetric& metric) {
  const ConeMetric m = is_simplicial(metric) ? metric : make_simplicial(metric);
  Json j;
  j["vertex_count"] = m.vertex_count();
  Json tris = Json::array();
  for (const Face& f : m.triangulation().faces()) tris.push_back({f[0], f[1], f[2]});
  j["triangles"] = std::move(tris);
  Json lengths = Json::object();
  for (const auto& [key, len] : m.length_map()) lengths[key.str()] = len;
  j["lengths"] = std::move(lengths);
  return dump(j);
}

std::vector<Vec3> parse_points_json(const std::string& text) {
  const Json j = parse(text);
  require_keys(j, {"points"}, {"points"});
  if (!j["points"].is_array()) invalid("points must be an array");
  std::vector<Vec3> pts;
  for (const auto& p : j["points"]) {
    const auto c = number_array(p, 3, "point");
    pts.emplace_back(c[0], c[1], c[2]);
  }
  return pts;
}

std::string emit_points_json(const std::vector<Vec3>& points) {
  Json j;
  j["points"] = points_array(points);
  return dump(j);
}

PolygonGluing parse_gluing_json(const std::string& text) {
  const Json j = parse(text);
  require_keys(j, {"polygon", "scheme"}, {"polygon", "scheme"});
  PolygonGluing g;
  if (!j["polygon"].is_array()) invalid("polygon must be an array");
  for (const auto& p : j["polygon"]) {
    const auto c = number_array(p, 2, "polygon corner");
    g.polygon.emplace_back(c[0], c[1]);
  }
  const Json& scheme = j["scheme"];
  if (scheme.is_string()) {
    if (scheme.get<std::string>() != "double") invalid("scheme must be \"double\" or a list of segment pairs");
    g.doubled = true;
    return g;
  }
  if (!scheme.is_array()) invalid("scheme must be \"double\" or a list of segment pairs");
  for (const auto& pair : scheme) {
    if (!pair.is_array() || pair.size() != 2) invalid("a segment pair must hold two intervals");
    const auto a = number_array(pair[0], 2, "interval");
    const auto b = number_array(pair[1], 2, "interval");
    g.pairs.push_back({{a[0], a[1]}, {b[0], b[1]}});
  }
  return g;
}

std::string emit_gluing_json(const PolygonGluing& gluing) {
  Json j;
  Json poly = Json::array();
  for (const auto& p : gluing.polygon) poly.push_back({p.x(), p.y()});
  j["polygon"] = std::move(poly);
  if (gluing.doubled) {
    j["scheme"] = "double";
  } else {
    Json pairs = Json::array();
    for (const auto& sp : gluing.pairs) {
      pairs.push_back(Json::array({Json::array({sp.first.begin, sp.first.end}), Json::array({sp.second.begin, sp.second.end})}));
    }
    j["scheme"] = std::move(pairs);
  }
  return dump(j);
}

std::string emit_report_json(const ConeMetric& metric, const Tolerances& tol) {
  const CurvatureReport rep = curvature_report(metric, tol);
  const PsiCheck psi = is_in_psi(metric, tol);
  Json j;
  j["vertex_count"] = metric.vertex_count();
  j["edge_count"] = metric.edge_count();
  j["face_count"] = metric.face_count();
  j["total_area"] = metric.total_area();
  j["essential_count"] = rep.essential_count();
  j["essential_vertices"] = rep.essential_vertices();
  j["total_deficit"] = rep.total_deficit();
  j["gauss_bonnet_error"] = rep.total_deficit() - 2.0 * kTwoPi;
  j["admissible"] = psi.admissible;
  if (psi.offender) {
    j["offender"] = *psi.offender;
    j["offender_angle"] = psi.offender_angle;
  }
  Json verts = Json::array();
  for (std::size_t v = 0; v < rep.vertices.size(); ++v) {
    Json e;
    e["id"] = v;
    e["angle_sum"] = rep.vertices[v].angle_sum;
    e["deficit"] = rep.vertices[v].deficit;
    e["essential"] = rep.vertices[v].essential;
    verts.push_back(std::move(e));
  }
  j["vertices"] = std::move(verts);
  return dump(j);
}

std::string emit_path_json(const GeodesicPath& path) {
  auto crossings = [](const std::vector<EdgeCrossing>& cs) {
    Json arr = Json::array();
    for (const auto& c : cs) {
      Json e;
      e["halfedge"] = c.halfedge;
      e["t"] = c.t;
      arr.push_back(std::move(e));
    }
    return arr;
  };
  Json j;
  j["source"] = path.source;
  j["target"] = path.target;
  j["length"] = path.length;
  j["through_vertices"] = path.through_vertices;
  j["faces"] = path.faces;
  Json legs = Json::array();
  for (const auto& leg : path.legs) {
    Json l;
    l["from"] = leg.from;
    l["to"] = leg.to;
    l["length"] = leg.length;
    l["start_halfedge"] = leg.start.halfedge;
    l["start_angle"] = leg.start.angle;
    l["faces"] = leg.faces;
    l["crossings"] = crossings(leg.crossings);
    legs.push_back(std::move(l));
  }
  j["legs"] = std::move(legs);
  return dump(j);
}

std::string emit_embedding_json(const EmbeddingResult& result) {
  Json j;
  j["vertices"] = result.vertices;
  j["points"] = points_array({result.points.begin(), result.points.end()});
  j["degenerate"] = result.degenerate;
  j["cayley_menger"] = result.cayley_menger;
  j["signed_volume"] = result.signed_volume;
  j["residuals"] = result.residuals;
  j["max_residual"] = result.max_residual;
  j["triangulations_visited"] = result.triangulations_visited;
  return dump(j);
}

std::string emit_fingerprint_json(const IsometryFingerprint& fp) {
  Json j;
  j["deficits"] = fp.deficits;
  j["distances"] = fp.distances;
  j["area"] = fp.area;
  return dump(j);
}

std::string emit_obj(const std::vector<Vec3>& points, const std::vector<std::vector<int>>& faces) {
  std::ostringstream os;
  for (const auto& p : points) {
    os << "v " << format_number(p.x()) << " " << format_number(p.y()) << " " << format_number(p.z()) << "\n";
  }
  for (const auto& f : faces) {
    os << "f";
    for (int v : f) os << " " << v + 1;
    os << "\n";
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) invalid("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) invalid("cannot write " + path);
  out << contents;
}

}  // namespace alexandrov
