#include "alexandrov/retriangulation.hpp"

#include "alexandrov/curvature.hpp"
#include "alexandrov/error.hpp"

#include <algorithm>

namespace alexandrov {

namespace {

constexpr int kMaxFlips = 100000;

bool star_has_loop(const MeshEditor& ed, int v) {
  const auto out = ed.outgoing(v);
  return std::any_of(out.begin(), out.end(), [&](int h) { return ed.head(h) == v; });
}

// Returns false when every spoke flip is blocked.
bool reduce_flat_vertex(MeshEditor& ed, int v) {
  auto opposite = [&](int h) { return ed.face_vertices(MeshEditor::face(h))[(h % 3 + 2) % 3]; };
  auto try_flip = [&](bool loops, bool allow_new_loop) {
    for (int h : ed.outgoing(v)) {
      if ((ed.head(h) == v) != loops) continue;
      const int c = opposite(h), d = opposite(ed.twin(h));
      if ((c == d && !allow_new_loop) || c == v || d == v || !ed.flippable(h)) continue;
      ed.flip(h);
      return true;
    }
    return false;
  };
  while (ed.degree(v) > 3 || star_has_loop(ed, v)) {
    if (try_flip(true, false) || try_flip(false, false)) continue;
    // A loop at a neighbour is acceptable; it never involves this vertex again.
    if (try_flip(true, true) || try_flip(false, true)) continue;
    return false;
  }
  ed.remove_degree3_vertex(v);
  return true;
}

bool delaunay_violated(const MeshEditor& ed, int h) {
  const int o = ed.twin(h);
  return ed.corner_angle(MeshEditor::prev(h)) + ed.corner_angle(MeshEditor::prev(o)) > kPi + 1e-12;
}

void make_delaunay(MeshEditor& ed) {
  int flips = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int f = 0; f < ed.face_slots(); ++f) {
      if (!ed.face_alive(f)) continue;
      for (int k = 0; k < 3; ++k) {
        const int h = 3 * f + k;
        if (h > ed.twin(h) || !delaunay_violated(ed, h) || !ed.flippable(h)) continue;
        ed.flip(h);
        changed = true;
        if (++flips > kMaxFlips) throw Error(ErrorCode::NumericallyAmbiguous, "Delaunay flipping did not terminate");
        break;
      }
    }
  }
}

std::vector<EdgeProvenance> trace_provenance(const ConeMetric& source, const ConeMetric& metric,
                                             const std::vector<double>& signposts,
                                             const std::vector<int>& source_vertex) {
  const MeshEditor src(source, true);
  const Triangulation& tri = metric.triangulation();
  std::vector<EdgeProvenance> out;
  out.reserve(tri.edge_count());
  for (int e = 0; e < tri.edge_count(); ++e) {
    const int h = tri.edge_halfedge(e);
    EdgeProvenance p;
    p.from = source_vertex[tri.tail(h)];
    p.to = source_vertex[tri.head(h)];
    p.length = metric.length(h);
    p.start = src.direction_from_signpost(p.from, signposts[h]);
    TraceResult tr = trace_straight(src, p.start, p.length);
    if (!tr.ends_at_vertex || tr.end_vertex != p.to) {
      throw Error(ErrorCode::NumericallyAmbiguous, "edge " + std::to_string(e) + " does not trace back onto the source");
    }
    p.faces = std::move(tr.faces);
    p.crossings = std::move(tr.crossings);
    p.through_vertices = std::move(tr.through_vertices);
    out.push_back(std::move(p));
  }
  return out;
}

EssentialTriangulation finish(const MeshEditor& ed, std::shared_ptr<const ConeMetric> source,
                              const std::vector<int>& old_source_vertex, const Tolerances& tol) {
  std::vector<int> vmap, hmap;
  EssentialTriangulation out{ed.to_metric(tol, &vmap, &hmap), {}, {}, {}, std::move(source)};
  out.source_vertex.assign(out.metric.vertex_count(), -1);
  for (std::size_t v = 0; v < vmap.size(); ++v) {
    if (vmap[v] >= 0) out.source_vertex[vmap[v]] = old_source_vertex[v];
  }
  out.signposts.assign(out.metric.triangulation().halfedge_count(), 0.0);
  for (std::size_t h = 0; h < hmap.size(); ++h) {
    if (hmap[h] >= 0) out.signposts[hmap[h]] = ed.signpost(static_cast<int>(h));
  }
  out.provenance = trace_provenance(*out.source, out.metric, out.signposts, out.source_vertex);
  return out;
}

}  // namespace

EssentialTriangulation retriangulate_essential(const ConeMetric& metric, const Tolerances& tol) {
  const PsiCheck psi = is_in_psi(metric, tol);
  if (!psi.admissible) {
    throw Error(ErrorCode::NotAdmissible, "vertex " + std::to_string(*psi.offender) + " has angle sum above 2pi");
  }
  const CurvatureReport report = curvature_report(metric, tol);
  if (report.essential_count() < 3) throw Error(ErrorCode::InvalidInput, "fewer than three essential vertices");

  MeshEditor ed(metric, true);
  std::vector<int> pending;
  for (int v = 0; v < metric.vertex_count(); ++v) {
    if (!report.vertices[v].essential) pending.push_back(v);
  }
  bool relaxed = false;
  while (!pending.empty()) {
    const auto before = pending.size();
    std::erase_if(pending, [&](int v) { return reduce_flat_vertex(ed, v); });
    if (pending.size() < before) {
      relaxed = false;
      continue;
    }
    // Spokes are blocked when the vertex sits on a segment between neighbours.
    const auto planar = std::find_if(pending.begin(), pending.end(), [&](int v) { return !star_has_loop(ed, v); });
    if (planar != pending.end()) {
      ed.remove_vertex_planar(*planar);
      pending.erase(planar);
      relaxed = false;
      continue;
    }
    // Delaunay flips reshape stars whose loops block every spoke.
    if (relaxed) throw Error(ErrorCode::NumericallyAmbiguous, "flat vertex star cannot be untangled");
    make_delaunay(ed);
    relaxed = true;
  }
  make_delaunay(ed);

  std::vector<int> identity(metric.vertex_count());
  for (int v = 0; v < metric.vertex_count(); ++v) identity[v] = v;
  return finish(ed, std::make_shared<const ConeMetric>(metric), identity, tol);
}

EssentialTriangulation edge_flip(const EssentialTriangulation& tri, int edge, const Tolerances& tol) {
  const Triangulation& t = tri.metric.triangulation();
  if (edge < 0 || edge >= t.edge_count()) throw Error(ErrorCode::InvalidInput, "edge index out of range");
  MeshEditor ed(tri.metric, false);
  ed.load_signposts(tri.signposts);
  ed.flip(t.edge_halfedge(edge));
  return finish(ed, tri.source, tri.source_vertex, tol);
}

}  // namespace alexandrov
