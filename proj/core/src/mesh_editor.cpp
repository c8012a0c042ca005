#include "alexandrov/mesh_editor.hpp"

#include "alexandrov/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace alexandrov {

MeshEditor::MeshEditor(const ConeMetric& metric, bool track_signposts) {
  const Triangulation& tri = metric.triangulation();
  vertex_count_ = tri.vertex_count();
  faces_ = tri.faces();
  twin_ = tri.twins();
  hlen_.resize(twin_.size());
  for (int h = 0; h < tri.halfedge_count(); ++h) hlen_[h] = metric.length(h);
  alive_.assign(faces_.size(), 1);
  vertex_alive_.assign(vertex_count_, 1);
  vertex_halfedge_.resize(vertex_count_);
  for (int v = 0; v < vertex_count_; ++v) vertex_halfedge_[v] = tri.outgoing(v).front();
  vertex_angle_.resize(vertex_count_);
  for (int v = 0; v < vertex_count_; ++v) vertex_angle_[v] = angle_sum(v);
  if (track_signposts) {
    signpost_.assign(twin_.size(), 0.0);
    for (int v = 0; v < vertex_count_; ++v) reset_vertex_frame(vertex_halfedge_[v]);
  }
}

double MeshEditor::corner_angle(int h) const {
  return alexandrov::corner_angle(hlen_[next(h)], hlen_[h], hlen_[prev(h)]);
}

double MeshEditor::angle_sum(int v) const {
  double s = 0.0;
  const int start = vertex_halfedge_[v];
  int h = start;
  int guard = 0;
  do {
    s += corner_angle(h);
    h = rotate_ccw(h);
    if (++guard > static_cast<int>(twin_.size())) throw Error(ErrorCode::NonManifold, "broken vertex orbit");
  } while (h != start);
  return s;
}

int MeshEditor::degree(int v) const { return static_cast<int>(outgoing(v).size()); }

std::vector<int> MeshEditor::outgoing(int v) const {
  std::vector<int> out;
  const int start = vertex_halfedge_[v];
  int h = start;
  do {
    out.push_back(h);
    h = rotate_ccw(h);
    if (out.size() > twin_.size()) throw Error(ErrorCode::NonManifold, "broken vertex orbit");
  } while (h != start);
  return out;
}

double MeshEditor::face_area(int f) const {
  return triangle_area(hlen_[3 * f], hlen_[3 * f + 1], hlen_[3 * f + 2]);
}

std::array<Vec2, 3> MeshEditor::layout(int h, const Vec2& tail_pos, const Vec2& head_pos) const {
  std::array<Vec2, 3> p;
  const int k = h % 3;
  p[k] = tail_pos;
  p[(k + 1) % 3] = head_pos;
  p[(k + 2) % 3] = place_apex(tail_pos, head_pos, hlen_[prev(h)], hlen_[next(h)]);
  return p;
}

void MeshEditor::set_signpost_cw(int h) {
  const int cw = rotate_cw(h);
  signpost_[h] = wrap_angle(signpost_[cw] + corner_angle(cw), vertex_angle_[tail(h)]);
}

void MeshEditor::reset_vertex_frame(int reference) {
  if (signpost_.empty()) return;
  double acc = 0.0;
  int h = reference;
  do {
    signpost_[h] = acc;
    acc += corner_angle(h);
    h = rotate_ccw(h);
  } while (h != reference);
}

void MeshEditor::relink(const std::vector<std::pair<int, int>>& moves, const std::vector<int>& old_twin) {
  // moves: (old halfedge id, new halfedge id) for boundary halfedges that changed slot.
  auto map_id = [&](int old) {
    for (const auto& [from, to] : moves) {
      if (from == old) return to;
    }
    return old;
  };
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const int nh = moves[i].second;
    const int nt = map_id(old_twin[i]);
    twin_[nh] = nt;
    twin_[nt] = nh;
  }
}

MeshEditor::Split MeshEditor::split_edge(int h, double t) {
  const int o = twin_[h];
  const int f1 = face(h), f2 = face(o);
  if (f1 == f2) throw Error(ErrorCode::NumericallyAmbiguous, "cannot split an edge with both sides in one face");
  const int k = h % 3, m = o % 3;
  const int a = tail(h), b = head(h);
  const int c = faces_[f1][(k + 2) % 3];
  const int d = faces_[f2][(m + 2) % 3];
  const int hn = next(h), on = next(o);
  const int t_bc = twin_[hn], t_ad = twin_[on];
  for (int x : {t_bc, t_ad}) {
    if (x == h || x == o || x == hn || x == on) {
      throw Error(ErrorCode::NumericallyAmbiguous, "edge split on a self-glued configuration");
    }
  }

  const double len = hlen_[h];
  const auto p1 = layout(h, Vec2(0, 0), Vec2(len, 0));
  const auto p2 = layout(o, Vec2(0, 0), Vec2(len, 0));
  const Vec2 split1(t * len, 0.0);
  const Vec2 split2((1.0 - t) * len, 0.0);
  const double pc = (p1[(k + 2) % 3] - split1).norm();
  const double pd = (p2[(m + 2) % 3] - split2).norm();
  const double len_bc = hlen_[hn], len_ad = hlen_[on];

  const int p = vertex_count_++;
  const int g1 = static_cast<int>(faces_.size());
  const int g2 = g1 + 1;
  faces_[f1][(k + 1) % 3] = p;  // (a, p, c)
  faces_[f2][(m + 1) % 3] = p;  // (b, p, d)
  faces_.push_back({p, b, c});
  faces_.push_back({p, a, d});
  alive_.push_back(1);
  alive_.push_back(1);
  twin_.resize(faces_.size() * 3);
  hlen_.resize(faces_.size() * 3);
  if (!signpost_.empty()) signpost_.resize(faces_.size() * 3);
  vertex_alive_.push_back(1);
  vertex_halfedge_.push_back(3 * g1);
  vertex_angle_.push_back(kTwoPi);

  auto pair = [&](int x, int y, double l) {
    twin_[x] = y;
    twin_[y] = x;
    hlen_[x] = l;
    hlen_[y] = l;
  };
  pair(h, 3 * g2, t * len);
  pair(o, 3 * g1, (1.0 - t) * len);
  pair(hn, 3 * g1 + 2, pc);
  pair(on, 3 * g2 + 2, pd);
  pair(3 * g1 + 1, t_bc, len_bc);
  pair(3 * g2 + 1, t_ad, len_ad);

  vertex_halfedge_[a] = h;
  vertex_halfedge_[b] = o;

  if (!signpost_.empty()) {
    signpost_[3 * g1 + 1] = signpost_[hn];  // b -> c keeps its direction
    signpost_[3 * g2 + 1] = signpost_[on];  // a -> d keeps its direction
    set_signpost_cw(3 * g1 + 2);            // c -> p
    set_signpost_cw(3 * g2 + 2);            // d -> p
    reset_vertex_frame(3 * g1);
  }
  return Split{p, hn, on, 3 * g2, 3 * g1};
}

int MeshEditor::insert_in_face(int f, const std::array<double, 3>& bary) {
  const int h0 = 3 * f;
  const auto pos = layout(h0, Vec2(0, 0), Vec2(hlen_[h0], 0));
  const Vec2 x = bary[0] * pos[0] + bary[1] * pos[1] + bary[2] * pos[2];
  const int a = faces_[f][0], b = faces_[f][1], c = faces_[f][2];
  const double pa = (x - pos[0]).norm(), pb = (x - pos[1]).norm(), pc = (x - pos[2]).norm();
  const int t1 = twin_[3 * f + 1], t2 = twin_[3 * f + 2];
  const double l1 = hlen_[3 * f + 1], l2 = hlen_[3 * f + 2];
  const double s1 = signpost_.empty() ? 0.0 : signpost_[3 * f + 1];
  const double s2 = signpost_.empty() ? 0.0 : signpost_[3 * f + 2];

  const int p = vertex_count_++;
  const int g1 = static_cast<int>(faces_.size());
  const int g2 = g1 + 1;
  faces_[f] = {a, b, p};
  faces_.push_back({b, c, p});
  faces_.push_back({c, a, p});
  alive_.push_back(1);
  alive_.push_back(1);
  twin_.resize(faces_.size() * 3);
  hlen_.resize(faces_.size() * 3);
  if (!signpost_.empty()) signpost_.resize(faces_.size() * 3);
  vertex_alive_.push_back(1);
  vertex_halfedge_.push_back(3 * f + 2);
  vertex_angle_.push_back(kTwoPi);

  auto pair = [&](int u, int w, double l) {
    twin_[u] = w;
    twin_[w] = u;
    hlen_[u] = l;
    hlen_[w] = l;
  };
  pair(3 * g1, t1, l1);          // b -> c
  pair(3 * g2, t2, l2);          // c -> a
  pair(3 * f + 1, 3 * g1 + 2, pb);  // b -> p / p -> b
  pair(3 * g1 + 1, 3 * g2 + 2, pc); // c -> p / p -> c
  pair(3 * g2 + 1, 3 * f + 2, pa);  // a -> p / p -> a
  vertex_halfedge_[b] = 3 * g1;
  vertex_halfedge_[c] = 3 * g2;
  vertex_halfedge_[a] = 3 * f;

  if (!signpost_.empty()) {
    signpost_[3 * g1] = s1;
    signpost_[3 * g2] = s2;
    set_signpost_cw(3 * f + 1);
    set_signpost_cw(3 * g1 + 1);
    set_signpost_cw(3 * g2 + 1);
    reset_vertex_frame(3 * f + 2);
  }
  return p;
}

namespace {

struct Quad {
  Vec2 a, b, c, d;  // a, b on the shared edge; c left of a->b, d right
};

}  // namespace

static Quad unfold_quad(const MeshEditor& m, int h) {
  const int o = m.twin(h);
  const double len = m.length(h);
  Quad q;
  q.a = Vec2(0, 0);
  q.b = Vec2(len, 0);
  q.c = place_apex(q.a, q.b, m.length(MeshEditor::prev(h)), m.length(MeshEditor::next(h)));
  q.d = place_apex(q.b, q.a, m.length(MeshEditor::prev(o)), m.length(MeshEditor::next(o)));
  return q;
}

bool MeshEditor::flippable(int h, double rel_tol) const {
  const int o = twin_[h];
  if (face(h) == face(o)) return false;
  const Quad q = unfold_quad(*this, h);
  const double len = hlen_[h];
  const double dy = q.c.y() - q.d.y();
  if (q.c.y() <= rel_tol * len || -q.d.y() <= rel_tol * len || dy <= 0.0) return false;
  const double x = q.c.x() + (q.d.x() - q.c.x()) * q.c.y() / dy;
  return x > rel_tol * len && x < (1.0 - rel_tol) * len;
}

double MeshEditor::flipped_length(int h) const {
  const Quad q = unfold_quad(*this, h);
  return (q.c - q.d).norm();
}

int MeshEditor::flip(int h) {
  if (!flippable(h)) throw Error(ErrorCode::NotFlippable, "unfolded quadrilateral is not strictly convex");
  const double diag = flipped_length(h);
  const int o = twin_[h];
  const int f1 = face(h), f2 = face(o);
  const int a = tail(h), b = head(h);
  const int c = faces_[f1][(h % 3 + 2) % 3];
  const int d = faces_[f2][(o % 3 + 2) % 3];
  const int hn = next(h), hp = prev(h), on = next(o), op = prev(o);

  // Boundary halfedges in their old slots and where they go.
  const std::vector<int> old_ids{hp, on, op, hn};
  const std::vector<int> new_ids{3 * f1, 3 * f1 + 1, 3 * f2, 3 * f2 + 1};
  std::vector<int> old_twin;
  std::vector<double> old_len, old_sign;
  for (int x : old_ids) {
    old_twin.push_back(twin_[x]);
    old_len.push_back(hlen_[x]);
    old_sign.push_back(signpost_.empty() ? 0.0 : signpost_[x]);
  }

  faces_[f1] = {c, a, d};
  faces_[f2] = {d, b, c};
  std::vector<std::pair<int, int>> moves;
  for (std::size_t i = 0; i < old_ids.size(); ++i) {
    moves.emplace_back(old_ids[i], new_ids[i]);
    hlen_[new_ids[i]] = old_len[i];
    if (!signpost_.empty()) signpost_[new_ids[i]] = old_sign[i];
  }
  relink(moves, old_twin);
  twin_[3 * f1 + 2] = 3 * f2 + 2;
  twin_[3 * f2 + 2] = 3 * f1 + 2;
  hlen_[3 * f1 + 2] = diag;
  hlen_[3 * f2 + 2] = diag;
  vertex_halfedge_[c] = 3 * f1;
  vertex_halfedge_[a] = 3 * f1 + 1;
  vertex_halfedge_[d] = 3 * f2;
  vertex_halfedge_[b] = 3 * f2 + 1;
  if (!signpost_.empty()) {
    set_signpost_cw(3 * f2 + 2);  // c -> d
    set_signpost_cw(3 * f1 + 2);  // d -> c
  }
  return 3 * f2 + 2;
}

void MeshEditor::remove_degree3_vertex(int v) {
  const std::vector<int> out = outgoing(v);
  if (out.size() != 3) throw Error(ErrorCode::NumericallyAmbiguous, "vertex does not have degree three");
  const int fa = face(out[0]), fb = face(out[1]), fc = face(out[2]);
  if (fa == fb || fb == fc || fa == fc) throw Error(ErrorCode::NumericallyAmbiguous, "degenerate vertex star");
  std::vector<int> old_ids, old_twin;
  std::vector<double> old_len, old_sign;
  std::array<int, 3> x{};
  for (int i = 0; i < 3; ++i) {
    const int outer = next(out[i]);  // x_i -> x_{i+1}
    x[i] = head(out[i]);
    if (x[i] == v) throw Error(ErrorCode::NumericallyAmbiguous, "vertex star contains a loop");
    old_ids.push_back(outer);
    old_twin.push_back(twin_[outer]);
    old_len.push_back(hlen_[outer]);
    old_sign.push_back(signpost_.empty() ? 0.0 : signpost_[outer]);
  }
  faces_[fa] = {x[0], x[1], x[2]};
  alive_[fb] = 0;
  alive_[fc] = 0;
  std::vector<std::pair<int, int>> moves;
  for (int i = 0; i < 3; ++i) {
    moves.emplace_back(old_ids[i], 3 * fa + i);
    hlen_[3 * fa + i] = old_len[i];
    if (!signpost_.empty()) signpost_[3 * fa + i] = old_sign[i];
  }
  relink(moves, old_twin);
  for (int i = 0; i < 3; ++i) vertex_halfedge_[x[i]] = 3 * fa + i;
  vertex_alive_[v] = 0;
}

void MeshEditor::remove_vertex_planar(int v) {
  const std::vector<int> out = outgoing(v);
  const int k = static_cast<int>(out.size());
  if (k < 3) throw Error(ErrorCode::NumericallyAmbiguous, "vertex star too small");
  std::vector<Vec2> x(k);
  std::vector<int> id(k), outer(k), old_twin(k);
  std::vector<double> old_len(k), old_sign(k);
  double phi = 0.0, scale = 0.0;
  for (int i = 0; i < k; ++i) {
    if (head(out[i]) == v) throw Error(ErrorCode::NumericallyAmbiguous, "vertex star contains a loop");
    for (int j = 0; j < i; ++j) {
      if (face(out[j]) == face(out[i])) throw Error(ErrorCode::NumericallyAmbiguous, "degenerate vertex star");
    }
    x[i] = hlen_[out[i]] * Vec2(std::cos(phi), std::sin(phi));
    phi += corner_angle(out[i]);
    scale = std::max(scale, hlen_[out[i]]);
    id[i] = head(out[i]);
    outer[i] = next(out[i]);
    old_twin[i] = twin_[outer[i]];
    old_len[i] = hlen_[outer[i]];
    old_sign[i] = signpost_.empty() ? 0.0 : signpost_[outer[i]];
  }
  if (std::abs(phi - kTwoPi) > 1e-6) throw Error(ErrorCode::NumericallyAmbiguous, "vertex is not flat");

  // Ear clipping; ears whose new diagonal would join two copies of one vertex go last.
  std::vector<int> poly(k);
  for (int i = 0; i < k; ++i) poly[i] = i;
  std::vector<std::array<int, 3>> tris;
  const double eps = 1e-12 * scale * scale;
  auto inside = [&](const Vec2& p, const Vec2& a, const Vec2& b, const Vec2& c) {
    return cross(b - a, p - a) >= -eps && cross(c - b, p - b) >= -eps && cross(a - c, p - c) >= -eps;
  };
  while (poly.size() > 3) {
    const int m = static_cast<int>(poly.size());
    int ear = -1;
    for (int pass = 0; pass < 2 && ear < 0; ++pass) {
      for (int i = 0; i < m && ear < 0; ++i) {
        const int a = poly[(i + m - 1) % m], b = poly[i], c = poly[(i + 1) % m];
        if (pass == 0 && id[a] == id[c]) continue;
        if (cross(x[b] - x[a], x[c] - x[b]) <= eps) continue;
        bool blocked = false;
        for (int j : poly) {
          if (j != a && j != b && j != c && inside(x[j], x[a], x[b], x[c])) blocked = true;
        }
        if (!blocked) ear = i;
      }
    }
    if (ear < 0) throw Error(ErrorCode::NumericallyAmbiguous, "vertex star has no ear");
    tris.push_back({poly[(ear + m - 1) % m], poly[ear], poly[(ear + 1) % m]});
    poly.erase(poly.begin() + ear);
  }
  tris.push_back({poly[0], poly[1], poly[2]});

  std::vector<std::pair<int, int>> moves;
  std::vector<std::pair<std::pair<int, int>, int>> diagonals;
  for (int t = 0; t < k; ++t) {
    const int slot = face(out[t]);
    if (t >= k - 2) {
      alive_[slot] = 0;
      continue;
    }
    const auto& tri = tris[t];
    faces_[slot] = {id[tri[0]], id[tri[1]], id[tri[2]]};
    for (int e = 0; e < 3; ++e) {
      const int p = tri[e], q = tri[(e + 1) % 3];
      const int h = 3 * slot + e;
      vertex_halfedge_[id[p]] = h;
      if (q == (p + 1) % k) {
        moves.emplace_back(outer[p], h);
        hlen_[h] = old_len[p];
        if (!signpost_.empty()) signpost_[h] = old_sign[p];
      } else {
        hlen_[h] = (x[q] - x[p]).norm();
        if (!signpost_.empty()) {
          signpost_[h] = wrap_angle(old_sign[p] + ccw_angle(x[(p + 1) % k] - x[p], x[q] - x[p]), vertex_angle_[id[p]]);
        }
        diagonals.push_back({{p, q}, h});
      }
    }
  }
  std::vector<int> twins_of_moves;
  for (const auto& mv : moves) {
    for (int i = 0; i < k; ++i) {
      if (outer[i] == mv.first) twins_of_moves.push_back(old_twin[i]);
    }
  }
  relink(moves, twins_of_moves);
  for (const auto& [pq, h] : diagonals) {
    for (const auto& [qp, g] : diagonals) {
      if (qp.first == pq.second && qp.second == pq.first) twin_[h] = g;
    }
  }
  vertex_alive_[v] = 0;
}

void MeshEditor::load_signposts(std::vector<double> angles) {
  if (angles.size() != twin_.size()) throw Error(ErrorCode::InvalidInput, "signpost count does not match the mesh");
  signpost_ = std::move(angles);
}

Direction MeshEditor::rotate(Direction d, double delta) const {
  int h = d.halfedge;
  double a = d.angle + delta;
  int guard = 0;
  const int limit = 4 * static_cast<int>(twin_.size()) + 16;
  while (a > corner_angle(h)) {
    a -= corner_angle(h);
    h = rotate_ccw(h);
    if (++guard > limit) throw Error(ErrorCode::NumericallyAmbiguous, "direction rotation did not converge");
  }
  while (a < 0.0) {
    h = rotate_cw(h);
    a += corner_angle(h);
    if (++guard > limit) throw Error(ErrorCode::NumericallyAmbiguous, "direction rotation did not converge");
  }
  return Direction{h, a};
}

Direction MeshEditor::direction_from_signpost(int vertex, double angle) const {
  const int h = vertex_halfedge_[vertex];
  const double base = signpost_.empty() ? 0.0 : signpost_[h];
  return rotate(Direction{h, 0.0}, wrap_angle(angle - base, vertex_angle_[vertex]));
}

ConeMetric MeshEditor::to_metric(const Tolerances& tol, std::vector<int>* vertex_map,
                                 std::vector<int>* halfedge_map) const {
  std::vector<int> vmap(vertex_count_, -1);
  std::vector<char> used(vertex_count_, 0);
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    if (!alive_[f]) continue;
    for (int v : faces_[f]) used[v] = 1;
  }
  int nv = 0;
  for (int v = 0; v < vertex_count_; ++v) {
    if (used[v]) vmap[v] = nv++;
  }
  std::vector<int> fmap(faces_.size(), -1);
  int nf = 0;
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    if (alive_[f]) fmap[f] = nf++;
  }
  std::vector<int> hmap(twin_.size(), -1);
  std::vector<Face> faces;
  faces.reserve(nf);
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    if (!alive_[f]) continue;
    faces.push_back({vmap[faces_[f][0]], vmap[faces_[f][1]], vmap[faces_[f][2]]});
    for (int k = 0; k < 3; ++k) hmap[3 * f + k] = 3 * fmap[f] + k;
  }
  std::vector<int> twin(3 * nf);
  std::vector<double> hl(3 * nf);
  for (std::size_t h = 0; h < twin_.size(); ++h) {
    if (hmap[h] < 0) continue;
    twin[hmap[h]] = hmap[twin_[h]];
    hl[hmap[h]] = hlen_[h];
  }
  Triangulation tri = Triangulation::from_gluing(nv, std::move(faces), std::move(twin));
  std::vector<double> lengths(tri.edge_count());
  for (int e = 0; e < tri.edge_count(); ++e) lengths[e] = hl[tri.edge_halfedge(e)];
  if (vertex_map) *vertex_map = vmap;
  if (halfedge_map) *halfedge_map = hmap;
  return ConeMetric::from_edge_lengths(std::move(tri), std::move(lengths), tol);
}

RayHit intersect_ray_segment(const Vec2& origin, const Vec2& dir, const Vec2& p, const Vec2& q) {
  const Vec2 e = q - p;
  const double denom = cross(dir, e);
  RayHit hit;
  if (std::abs(denom) < 1e-300) return hit;
  const Vec2 w = p - origin;
  hit.s = cross(w, e) / denom;
  hit.t = cross(w, dir) / denom;
  hit.valid = true;
  return hit;
}

int find_halfedge(const MeshEditor& mesh, int a, int b) {
  for (int h : mesh.outgoing(a)) {
    if (mesh.head(h) == b) return h;
  }
  return -1;
}

namespace {

constexpr double kTraceParamTol = 1e-9;
constexpr double kFlatTol = 1e-7;

/// Direction at corner `slot` of a laid-out face pointing along `dir`.
Direction corner_direction(const MeshEditor& m, int f, int slot, const std::array<Vec2, 3>& pos, const Vec2& dir) {
  const int h = 3 * f + slot;
  const double a = ccw_angle(pos[(slot + 1) % 3] - pos[slot], dir);
  const double corner = m.corner_angle(h);
  // Angles just below zero wrap to ~2pi; map them back to the corner edge.
  double clamped = a > corner ? (a > 0.5 * (corner + kTwoPi) ? 0.0 : corner) : a;
  return Direction{h, clamped};
}

void require_flat(const MeshEditor& m, int v) {
  if (std::abs(m.angle_sum(v) - kTwoPi) > kFlatTol) {
    throw Error(ErrorCode::NumericallyAmbiguous, "straight line runs into cone point " + std::to_string(v));
  }
}

}  // namespace

TraceResult trace_straight(const MeshEditor& mesh, Direction start, double length) {
  TraceResult r;
  const double tol_len = 1e-9 * std::max(1.0, length);
  double done = 0.0;
  Direction d = start;
  for (int restart = 0; restart < 100000; ++restart) {
    const int h = d.halfedge;
    int f = MeshEditor::face(h);
    std::array<Vec2, 3> pos = mesh.layout(h, Vec2(0, 0), Vec2(mesh.length(h), 0));
    const Vec2 origin(0, 0);
    const Vec2 dir(std::cos(d.angle), std::sin(d.angle));
    const double remaining = length - done;
    int entry_slot = -1;
    std::array<int, 2> candidates{(h % 3 + 1) % 3, -1};
    r.faces.push_back(f);
    bool restarted = false;
    for (int step = 0; step < 1000000 && !restarted; ++step) {
      int best_slot = -1;
      RayHit best;
      double best_violation = 1e300;
      for (int slot : candidates) {
        if (slot < 0) continue;
        const RayHit hit = intersect_ray_segment(origin, dir, pos[slot], pos[(slot + 1) % 3]);
        if (!hit.valid || hit.s < -tol_len) continue;
        const double violation = std::max({-hit.t, hit.t - 1.0, 0.0});
        if (violation < best_violation) {
          best_violation = violation;
          best = hit;
          best_slot = slot;
        }
      }
      if (best_slot < 0) throw Error(ErrorCode::NumericallyAmbiguous, "trace lost its exit edge");
      const double t = std::clamp(best.t, 0.0, 1.0);
      if (remaining <= best.s + tol_len) {
        const Vec2 end = origin + remaining * dir;
        r.end_face = f;
        double best_dist = 1e300;
        for (int k = 0; k < 3; ++k) {
          const double dist = (end - pos[k]).norm();
          if (dist < best_dist) {
            best_dist = dist;
            r.end_vertex = mesh.face_vertices(f)[k];
          }
        }
        r.end_error = best_dist;
        r.ends_at_vertex = best_dist <= 1e-7 * std::max(1.0, length);
        if (!r.ends_at_vertex) r.end_vertex = -1;
        return r;
      }
      if (t < kTraceParamTol || t > 1.0 - kTraceParamTol) {
        const int slot = t < kTraceParamTol ? best_slot : (best_slot + 1) % 3;
        const int z = mesh.face_vertices(f)[slot];
        require_flat(mesh, z);
        r.through_vertices.push_back(z);
        const Direction back = corner_direction(mesh, f, slot, pos, -dir);
        d = mesh.rotate(back, kPi);
        done += best.s;
        restarted = true;
        break;
      }
      const int crossed = 3 * f + best_slot;
      r.crossings.push_back({crossed, t});
      const int entered = mesh.twin(crossed);
      const Vec2 tail_pos = pos[(best_slot + 1) % 3];
      const Vec2 head_pos = pos[best_slot];
      f = MeshEditor::face(entered);
      pos = mesh.layout(entered, tail_pos, head_pos);
      entry_slot = entered % 3;
      candidates = {(entry_slot + 1) % 3, (entry_slot + 2) % 3};
      r.faces.push_back(f);
    }
    if (!restarted) throw Error(ErrorCode::NumericallyAmbiguous, "trace exceeded its step limit");
  }
  throw Error(ErrorCode::NumericallyAmbiguous, "trace exceeded its restart limit");
}

std::optional<InsertedChain> insert_straight(MeshEditor& mesh, Direction start, double length) {
  InsertedChain chain;
  const double tol_len = 1e-9 * std::max(1.0, length);
  double done = 0.0;
  Direction d = start;
  chain.vertices.push_back(mesh.tail(d.halfedge));
  chain.arc.push_back(0.0);
  for (int guard = 0; guard < 100000; ++guard) {
    const int h = d.halfedge;
    const int k = h % 3;
    const auto pos = mesh.layout(h, Vec2(0, 0), Vec2(mesh.length(h), 0));
    const Vec2 dir(std::cos(d.angle), std::sin(d.angle));
    const int slot = (k + 1) % 3;
    const RayHit hit = intersect_ray_segment(Vec2(0, 0), dir, pos[slot], pos[(slot + 1) % 3]);
    if (!hit.valid) return std::nullopt;
    const double t = std::clamp(hit.t, 0.0, 1.0);
    const double remaining = length - done;
    const bool at_x = t < kTraceParamTol;
    const bool at_y = t > 1.0 - kTraceParamTol;
    if (remaining <= hit.s + tol_len) {
      if (std::abs(remaining - hit.s) > 1e-7 * std::max(1.0, length) || !(at_x || at_y)) return std::nullopt;
      const int step = at_x ? h : mesh.rotate_ccw(h);
      chain.halfedges.push_back(step);
      chain.vertices.push_back(mesh.head(step));
      chain.arc.push_back(length);
      return chain;
    }
    if (at_x || at_y) {
      const int step = at_x ? h : mesh.rotate_ccw(h);
      const int z = mesh.head(step);
      if (std::abs(mesh.angle_sum(z) - kTwoPi) > kFlatTol) return std::nullopt;
      done += hit.s;
      chain.halfedges.push_back(step);
      chain.vertices.push_back(z);
      chain.arc.push_back(done);
      d = mesh.rotate(Direction{mesh.twin(step), 0.0}, kPi);
      continue;
    }
    // Split the opposite edge x->y where the segment crosses it.
    const int opposite = MeshEditor::next(h);
    const MeshEditor::Split split = mesh.split_edge(opposite, t);
    done += hit.s;
    const int back = split.to_opposite;  // p -> current vertex
    chain.halfedges.push_back(mesh.twin(back));
    chain.vertices.push_back(split.vertex);
    chain.arc.push_back(done);
    d = mesh.rotate(Direction{back, 0.0}, kPi);
  }
  return std::nullopt;
}

}  // namespace alexandrov
