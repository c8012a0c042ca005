#include "alexandrov/surgery.hpp"

#include "alexandrov/curvature.hpp"
#include "alexandrov/error.hpp"
#include "alexandrov/mesh_editor.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <string>

namespace alexandrov {

namespace {

// Plain face/twin arrays for edits MeshEditor does not offer (cutting, gluing).
struct RawMesh {
  int vertex_count = 0;
  std::vector<Face> faces;
  std::vector<int> twin;
  std::vector<double> hlen;
  std::vector<char> alive;

  static RawMesh from(const MeshEditor& ed) {
    RawMesh r;
    r.vertex_count = ed.vertex_count();
    for (int f = 0; f < ed.face_slots(); ++f) {
      r.faces.push_back(ed.face_vertices(f));
      r.alive.push_back(ed.face_alive(f) ? 1 : 0);
      for (int k = 0; k < 3; ++k) {
        r.twin.push_back(ed.twin(3 * f + k));
        r.hlen.push_back(ed.length(3 * f + k));
      }
    }
    return r;
  }

  int add_face(const Face& f, const std::array<double, 3>& lengths) {
    faces.push_back(f);
    alive.push_back(1);
    for (double l : lengths) {
      twin.push_back(-1);
      hlen.push_back(l);
    }
    return static_cast<int>(faces.size()) - 1;
  }

  void glue(int h, int g) {
    twin[h] = g;
    twin[g] = h;
  }

  [[nodiscard]] int rotate_ccw(int h) const { return twin[Triangulation::prev(h)]; }

  ConeMetric build(const Tolerances& tol, std::vector<int>* vertex_map = nullptr) const {
    std::vector<int> vmap(vertex_count, -1), fmap(faces.size(), -1), old_of_new;
    std::vector<char> used(vertex_count, 0);
    int nv = 0, nf = 0;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!alive[f]) continue;
      fmap[f] = nf++;
      for (int x : faces[f]) used[x] = 1;
    }
    for (int x = 0; x < vertex_count; ++x) {
      if (used[x]) vmap[x] = nv++;
    }
    std::vector<Face> out_faces;
    std::vector<int> out_twin;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!alive[f]) continue;
      out_faces.push_back({vmap[faces[f][0]], vmap[faces[f][1]], vmap[faces[f][2]]});
      for (int k = 0; k < 3; ++k) {
        const int t = twin[3 * f + k];
        if (t < 0 || !alive[t / 3]) throw Error(ErrorCode::NumericallyAmbiguous, "surgery left an open edge");
        out_twin.push_back(3 * fmap[t / 3] + t % 3);
        old_of_new.push_back(static_cast<int>(3 * f + k));
      }
    }
    Triangulation tri = Triangulation::from_gluing(nv, std::move(out_faces), std::move(out_twin));
    std::vector<double> lengths(tri.edge_count());
    for (int e = 0; e < tri.edge_count(); ++e) lengths[e] = hlen[old_of_new[tri.edge_halfedge(e)]];
    if (vertex_map) *vertex_map = vmap;
    return ConeMetric::from_edge_lengths(std::move(tri), std::move(lengths), tol);
  }
};

void check_vertex(const ConeMetric& m, int v, const char* name) {
  if (v < 0 || v >= m.vertex_count()) throw Error(ErrorCode::InvalidInput, std::string(name) + " is out of range");
}

// Splits chain edges so that `target` has a vertex at every arc position of `source`.
void align_chain(MeshEditor& ed, InsertedChain& target, const InsertedChain& source, double tol) {
  for (std::size_t i = 1; i + 1 < source.arc.size(); ++i) {
    const double s = source.arc[i];
    std::size_t j = 0;
    while (j + 1 < target.arc.size() && target.arc[j + 1] < s - tol) ++j;
    if (std::abs(target.arc[j] - s) <= tol || std::abs(target.arc[j + 1] - s) <= tol) continue;
    const double t = (s - target.arc[j]) / (target.arc[j + 1] - target.arc[j]);
    const MeshEditor::Split split = ed.split_edge(target.halfedges[j], t);
    target.vertices.insert(target.vertices.begin() + static_cast<long>(j) + 1, split.vertex);
    target.halfedges.insert(target.halfedges.begin() + static_cast<long>(j) + 1, split.to_head);
    target.arc.insert(target.arc.begin() + static_cast<long>(j) + 1, s);
  }
}

}  // namespace

LensPatch LensPatch::from_angles(double base, double alpha, double beta) {
  if (!(base > 0.0) || alpha < 0.0 || beta < 0.0 || alpha + beta >= kPi) {
    throw Error(ErrorCode::InvalidInput, "lens angles must be non-negative with sum below pi");
  }
  if (alpha + beta == 0.0) return LensPatch{base, 0.5 * base, 0.5 * base};
  const double s = std::sin(alpha + beta);
  return LensPatch{base, base * std::sin(beta) / s, base * std::sin(alpha) / s};
}

double LensPatch::alpha() const {
  return std::atan2(4.0 * triangle_area(base, a, b), base * base + a * a - b * b);
}

double LensPatch::beta() const {
  return std::atan2(4.0 * triangle_area(base, a, b), base * base + b * b - a * a);
}

double LensPatch::gamma() const { return kPi - alpha() - beta(); }

bool LensPatch::degenerate(double rel_tol) const { return a + b <= base * (1.0 + rel_tol); }

ConeMetric cut_and_patch(const ConeMetric& metric, int v, int w, const LensPatch& patch, const SurgeryOptions& opts) {
  const Tolerances& tol = opts.geodesic.tol;
  check_vertex(metric, v, "v");
  check_vertex(metric, w, "w");
  if (v == w) throw Error(ErrorCode::InvalidInput, "v and w must differ");
  if (!(patch.base > 0.0) || !(patch.a > 0.0) || !(patch.b > 0.0) || !std::isfinite(patch.a + patch.b + patch.base)) {
    throw Error(ErrorCode::InvalidInput, "lens sides must be positive and finite");
  }
  if (patch.a + patch.b < patch.base * (1.0 - 1e-12) || patch.a + patch.base <= patch.b ||
      patch.b + patch.base <= patch.a) {
    throw Error(ErrorCode::InvalidInput, "lens sides violate the triangle inequality");
  }
  const CurvatureReport report = curvature_report(metric, tol);
  for (int x : {v, w}) {
    if (!report.vertices[x].essential) throw Error(ErrorCode::NotEssential, "vertex " + std::to_string(x) + " is flat");
  }
  const GeodesicPath g = shortest_geodesic(metric, v, w, opts.geodesic);
  if (std::abs(patch.base - g.length) > opts.base_tol * std::max(1.0, g.length)) {
    throw Error(ErrorCode::PatchBaseMismatch, "patch base differs from the geodesic length " + std::to_string(g.length));
  }
  const double alpha = patch.alpha(), beta = patch.beta();
  if (report.vertices[v].angle_sum + 2.0 * alpha > kTwoPi + tol.angle ||
      report.vertices[w].angle_sum + 2.0 * beta > kTwoPi + tol.angle) {
    throw Error(ErrorCode::AdmissibilityViolated, "patch would push an angle sum above 2pi");
  }
  if (patch.degenerate()) return metric;

  MeshEditor ed(metric);
  std::optional<InsertedChain> chain = insert_straight(ed, g.legs.front().start, g.length);
  if (!chain || chain->vertices.back() != w) throw Error(ErrorCode::NumericallyAmbiguous, "could not insert the slit");
  if (chain->halfedges.size() == 1) {
    const MeshEditor::Split s = ed.split_edge(chain->halfedges[0], 0.5);
    chain->vertices = {v, s.vertex, w};
    chain->halfedges = {chain->halfedges[0], s.to_head};
    chain->arc = {0.0, 0.5 * g.length, g.length};
  }
  const auto& H = chain->halfedges;
  const auto& P = chain->vertices;
  const int m = static_cast<int>(H.size());

  RawMesh r = RawMesh::from(ed);
  std::vector<int> left(P);
  for (int j = 1; j < m; ++j) {
    left[j] = r.vertex_count++;
    const int stop = r.twin[H[j - 1]];
    int h = H[j];
    for (int guard = 0; h != stop; ++guard) {
      if (guard > static_cast<int>(r.twin.size())) throw Error(ErrorCode::NumericallyAmbiguous, "broken slit side");
      r.faces[h / 3][h % 3] = left[j];
      h = r.rotate_ccw(h);
    }
  }
  const int apex = r.vertex_count++;
  const double base = chain->arc.back();
  const Vec2 A = place_apex(Vec2(0.0, 0.0), Vec2(base, 0.0), patch.a, patch.b);
  std::vector<double> lateral(m + 1);
  for (int j = 0; j <= m; ++j) lateral[j] = (Vec2(chain->arc[j], 0.0) - A).norm();

  std::vector<int> L(m), R(m), right_side(m);
  for (int j = 0; j < m; ++j) right_side[j] = r.twin[H[j]];
  for (int j = 0; j < m; ++j) {
    const double len = r.hlen[H[j]];
    L[j] = r.add_face({left[j + 1], left[j], apex}, {len, lateral[j], lateral[j + 1]});
    R[j] = r.add_face({P[j], P[j + 1], apex}, {len, lateral[j + 1], lateral[j]});
    r.glue(H[j], 3 * L[j]);
    r.glue(right_side[j], 3 * R[j]);
    if (j > 0) {
      r.glue(3 * L[j] + 1, 3 * L[j - 1] + 2);
      r.glue(3 * R[j] + 2, 3 * R[j - 1] + 1);
    }
  }
  r.glue(3 * L[0] + 1, 3 * R[0] + 2);
  r.glue(3 * L[m - 1] + 2, 3 * R[m - 1] + 1);
  return r.build(tol);
}

Excision excise_lens(const ConeMetric& metric, int p, int v, int w, const SurgeryOptions& opts) {
  const Tolerances& tol = opts.geodesic.tol;
  check_vertex(metric, p, "apex");
  check_vertex(metric, v, "v");
  check_vertex(metric, w, "w");
  if (p == v || p == w || v == w) throw Error(ErrorCode::InvalidInput, "apex, v and w must be distinct");
  const CurvatureReport report = curvature_report(metric, tol);
  if (!report.vertices[p].essential) throw Error(ErrorCode::NoLensFound, "apex is not a cone point");

  const GeodesicPath gv = shortest_geodesic(metric, p, v, opts.geodesic);
  const GeodesicPath gw = shortest_geodesic(metric, p, w, opts.geodesic);
  const double theta = report.vertices[p].angle_sum;
  const double sector = wrap_angle(angular_position(metric, gw.legs.front().start) -
                                       angular_position(metric, gv.legs.front().start),
                                   theta);
  if (std::abs(sector - 0.5 * theta) > 1e-7) throw Error(ErrorCode::NoLensFound, "geodesics do not bisect the apex angle");
  const double gamma = 0.5 * theta;
  const double a = gv.length, b = gw.length;
  const LensPatch patch{std::sqrt(std::max(0.0, a * a + b * b - 2.0 * a * b * std::cos(gamma))), a, b};
  if (patch.degenerate()) throw Error(ErrorCode::NoLensFound, "lens is empty");
  const double alpha = patch.alpha();
  const double ell = patch.base;

  MeshEditor ed(metric);
  const Direction to_apex = reverse_path(metric, gv).legs.front().start;
  std::optional<InsertedChain> c1 = insert_straight(ed, ed.rotate(to_apex, -alpha), ell);
  if (!c1 || c1->vertices.back() != w) throw Error(ErrorCode::NoLensFound, "first lens side does not reach w");
  std::optional<InsertedChain> c2 = insert_straight(ed, ed.rotate(Direction{c1->halfedges.front(), 0.0}, 2.0 * alpha), ell);
  if (!c2 || c2->vertices.back() != w) throw Error(ErrorCode::NoLensFound, "second lens side does not reach w");
  const double arc_tol = 1e-7 * std::max(1.0, ell);
  align_chain(ed, *c2, *c1, arc_tol);
  align_chain(ed, *c1, *c2, arc_tol);
  if (c1->arc.size() != c2->arc.size()) throw Error(ErrorCode::NoLensFound, "lens sides do not match up");

  std::set<int> barrier;
  std::set<int> on_chain(c1->vertices.begin(), c1->vertices.end());
  on_chain.insert(c2->vertices.begin(), c2->vertices.end());
  for (const auto* c : {&*c1, &*c2}) {
    for (int h : c->halfedges) {
      barrier.insert(h);
      barrier.insert(ed.twin(h));
    }
  }
  if (on_chain.count(p)) throw Error(ErrorCode::NoLensFound, "lens side runs through the apex");

  std::vector<char> region(ed.face_slots(), 0);
  std::deque<int> queue;
  for (int h : ed.outgoing(p)) {
    if (!region[MeshEditor::face(h)]) {
      region[MeshEditor::face(h)] = 1;
      queue.push_back(MeshEditor::face(h));
    }
  }
  double area = 0.0;
  int alive = 0, inside = 0;
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    ++inside;
    area += ed.face_area(f);
    for (int k = 0; k < 3; ++k) {
      const int h = 3 * f + k;
      const int x = ed.face_vertices(f)[k];
      if (x != p && !on_chain.count(x) && std::abs(ed.angle_sum(x) - kTwoPi) > tol.angle) {
        throw Error(ErrorCode::NoLensFound, "lens contains another cone point");
      }
      if (barrier.count(h)) continue;
      const int g = MeshEditor::face(ed.twin(h));
      if (!region[g]) {
        region[g] = 1;
        queue.push_back(g);
      }
    }
  }
  for (int f = 0; f < ed.face_slots(); ++f) alive += ed.face_alive(f) ? 1 : 0;
  const double expected = a * b * std::sin(gamma);
  if (inside >= alive || std::abs(area - expected) > 1e-6 * std::max(1.0, expected)) {
    throw Error(ErrorCode::NoLensFound, "region at the apex is not a doubled triangle");
  }

  RawMesh r = RawMesh::from(ed);
  const std::size_t m = c1->halfedges.size();
  std::vector<int> o1(m), o2(m);
  for (std::size_t j = 0; j < m; ++j) {
    const int h1 = c1->halfedges[j], h2 = c2->halfedges[j];
    if (region[h1 / 3] == region[r.twin[h1] / 3] || region[h2 / 3] == region[r.twin[h2] / 3]) {
      throw Error(ErrorCode::NoLensFound, "lens sides do not bound the region");
    }
    o1[j] = region[h1 / 3] ? r.twin[h1] : h1;
    o2[j] = region[h2 / 3] ? r.twin[h2] : h2;
    if ((o1[j] == h1) == (o2[j] == h2)) throw Error(ErrorCode::NoLensFound, "lens sides have the same orientation");
  }
  for (std::size_t j = 0; j < m; ++j) {
    const double len = 0.5 * (r.hlen[o1[j]] + r.hlen[o2[j]]);
    r.hlen[o1[j]] = r.hlen[o2[j]] = len;
    r.glue(o1[j], o2[j]);
  }
  for (std::size_t f = 0; f < r.faces.size(); ++f) {
    if (region[f]) {
      r.alive[f] = 0;
      continue;
    }
    for (int& x : r.faces[f]) {
      for (std::size_t j = 1; j + 1 < c2->vertices.size(); ++j) {
        if (x == c2->vertices[j]) x = c1->vertices[j];
      }
    }
  }
  std::vector<int> vmap;
  ConeMetric out = r.build(tol, &vmap);
  return Excision{std::move(out), patch, vmap[v], vmap[w]};
}

}  // namespace alexandrov
