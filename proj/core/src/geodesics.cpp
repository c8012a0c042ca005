#include "alexandrov/geodesics.hpp"

#include "alexandrov/curvature.hpp"
#include "alexandrov/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <queue>

namespace alexandrov {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kWedgeEps = 1e-12;

// Unfolding window: the part of face(h_in) visible from the origin through
// the edge P->Q of h_in, bounded by the rays `lo` (Q side) and `hi` (P side).
struct Window {
  int parent = -1;
  int origin = -1;  // first halfedge out of the source
  int h_in = -1;
  Vec2 p, q, lo, hi;
};

bool strictly_between(const Vec2& lo, const Vec2& hi, const Vec2& x) {
  const double nx = x.norm();
  return cross(lo, x) > kWedgeEps * lo.norm() * nx && cross(x, hi) > kWedgeEps * nx * hi.norm();
}

bool open_wedge(const Vec2& lo, const Vec2& hi) { return cross(lo, hi) > kWedgeEps * lo.norm() * hi.norm(); }

Vec2 ray_on_segment(const Vec2& dir, const Vec2& p, const Vec2& q) {
  const Vec2 e = q - p;
  const double den = cross(e, dir);
  const double s = den != 0.0 ? std::clamp(-cross(p, dir) / den, 0.0, 1.0) : 0.0;
  return p + s * e;
}

double origin_segment_distance(const Vec2& a, const Vec2& b) {
  const Vec2 e = b - a;
  const double ee = e.squaredNorm();
  const double s = ee > 0.0 ? std::clamp(-a.dot(e) / ee, 0.0, 1.0) : 0.0;
  return (a + s * e).norm();
}

double window_bound(const Window& w) {
  return origin_segment_distance(ray_on_segment(w.lo, w.p, w.q), ray_on_segment(w.hi, w.p, w.q));
}

Vec2 rotated(const Vec2& d, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return Vec2(c * d.x() - s * d.y(), s * d.x() + c * d.y());
}

class WindowSearch {
 public:
  WindowSearch(const ConeMetric& metric, std::size_t budget) : m_(metric), tri_(metric.triangulation()), budget_(budget) {}

  // Shortest straight legs from u to every wanted vertex within `radius`.
  std::map<int, GeodesicLeg> run(int u, double radius, const std::function<bool(int)>& wanted) {
    std::map<int, GeodesicLeg> best;
    nodes_.clear();
    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;

    for (int h : tri_.outgoing(u)) {
      const int a = tri_.head(h);
      if (a != u && wanted(a) && m_.length(h) <= radius) offer(best, edge_leg(u, h));
      const auto pos = layout_face(m_, h, Vec2::Zero(), Vec2(m_.length(h), 0.0));
      const int k = h % 3;
      const Vec2 A = pos[(k + 1) % 3], B = pos[(k + 2) % 3];
      Window w{-1, h, tri_.twin(Triangulation::next(h)), B, A, A, B};
      push(heap, w, radius);
    }

    while (!heap.empty()) {
      const auto [lb, idx] = heap.top();
      heap.pop();
      if (lb > radius) break;
      if (++used_ > budget_) throw Error(ErrorCode::SearchBudgetExceeded, "geodesic search exceeded its budget");
      const Window w = nodes_[idx];
      const int k = w.h_in % 3;
      const auto pos = layout_face(m_, w.h_in, w.p, w.q);
      const Vec2 C = pos[(k + 2) % 3];
      const int c = tri_.faces()[Triangulation::face(w.h_in)][(k + 2) % 3];
      if (strictly_between(w.lo, w.hi, C) && c != u && wanted(c) && C.norm() <= radius) {
        offer(best, window_leg(u, idx, C));
      }
      const Vec2 lo1 = w.lo, hi1 = cross(C, w.hi) > 0.0 ? C : w.hi;
      push(heap, Window{idx, w.origin, tri_.twin(Triangulation::next(w.h_in)), C, w.q, lo1, hi1}, radius);
      const Vec2 lo2 = cross(w.lo, C) > 0.0 ? C : w.lo, hi2 = w.hi;
      push(heap, Window{idx, w.origin, tri_.twin(Triangulation::prev(w.h_in)), w.p, C, lo2, hi2}, radius);
    }
    return best;
  }

 private:
  template <class Heap>
  void push(Heap& heap, const Window& w, double radius) {
    if (!open_wedge(w.lo, w.hi)) return;
    const double lb = window_bound(w);
    if (lb > radius) return;
    nodes_.push_back(w);
    heap.emplace(lb, static_cast<int>(nodes_.size()) - 1);
  }

  static void offer(std::map<int, GeodesicLeg>& best, GeodesicLeg leg) {
    auto it = best.find(leg.to);
    if (it == best.end()) {
      best.emplace(leg.to, std::move(leg));
      return;
    }
    const double tie = 1e-9 * std::max(1.0, leg.length);
    if (leg.length < it->second.length - tie ||
        (leg.length <= it->second.length + tie && leg.faces < it->second.faces)) {
      it->second = std::move(leg);
    }
  }

  GeodesicLeg edge_leg(int u, int h) const {
    GeodesicLeg leg;
    leg.from = u;
    leg.to = tri_.head(h);
    leg.length = m_.length(h);
    leg.start = Direction{h, 0.0};
    leg.faces = {Triangulation::face(h)};
    return leg;
  }

  GeodesicLeg window_leg(int u, int idx, const Vec2& C) const {
    std::vector<int> chain;
    for (int i = idx; i != -1; i = nodes_[i].parent) chain.push_back(i);
    std::reverse(chain.begin(), chain.end());
    GeodesicLeg leg;
    leg.from = u;
    leg.to = tri_.faces()[Triangulation::face(nodes_[idx].h_in)][(nodes_[idx].h_in % 3 + 2) % 3];
    leg.length = C.norm();
    const int origin = nodes_[idx].origin;
    leg.start = Direction{origin, std::clamp(ccw_angle(Vec2(1.0, 0.0), C), 0.0, m_.corner_angle(origin))};
    leg.faces.push_back(Triangulation::face(origin));
    for (int i : chain) {
      const Window& w = nodes_[i];
      const double t = -cross(w.p, C) / cross(w.q - w.p, C);
      leg.faces.push_back(Triangulation::face(w.h_in));
      leg.crossings.push_back(EdgeCrossing{tri_.twin(w.h_in), 1.0 - t});
    }
    return leg;
  }

  const ConeMetric& m_;
  const Triangulation& tri_;
  std::size_t budget_;
  std::size_t used_ = 0;
  std::vector<Window> nodes_;
};

double edge_graph_distance(const ConeMetric& m, int s, int t) {
  const Triangulation& tri = m.triangulation();
  std::vector<double> dist(tri.vertex_count(), kInf);
  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
  dist[s] = 0.0;
  pq.emplace(0.0, s);
  while (!pq.empty()) {
    const auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u]) continue;
    if (u == t) return d;
    for (int h : tri.outgoing(u)) {
      const int x = tri.head(h);
      if (d + m.length(h) < dist[x]) {
        dist[x] = d + m.length(h);
        pq.emplace(dist[x], x);
      }
    }
  }
  return dist[t];
}

GeodesicLeg reverse_leg(const ConeMetric& m, const GeodesicLeg& leg) {
  const Triangulation& tri = m.triangulation();
  GeodesicLeg r;
  r.from = leg.to;
  r.to = leg.from;
  r.length = leg.length;
  r.faces.assign(leg.faces.rbegin(), leg.faces.rend());
  for (auto it = leg.crossings.rbegin(); it != leg.crossings.rend(); ++it) {
    r.crossings.push_back(EdgeCrossing{tri.twin(it->halfedge), 1.0 - it->t});
  }
  if (leg.crossings.empty()) {
    const int tw = tri.twin(leg.start.halfedge);
    r.start = Direction{tw, 0.0};
    r.faces = {Triangulation::face(tw)};
    return r;
  }
  const EdgeCrossing& last = leg.crossings.back();
  const int h_in = tri.twin(last.halfedge);
  const int hb = Triangulation::prev(h_in);
  const auto pos = layout_face(m, hb, Vec2::Zero(), Vec2(m.length(hb), 0.0));
  const int s = h_in % 3;
  const Vec2 x = pos[s] + (1.0 - last.t) * (pos[(s + 1) % 3] - pos[s]);
  r.start = Direction{hb, std::clamp(ccw_angle(pos[(hb % 3 + 1) % 3], x), 0.0, m.corner_angle(hb))};
  return r;
}

void assemble(const ConeMetric& m, GeodesicPath& path) {
  path.length = 0.0;
  path.faces.clear();
  path.crossings.clear();
  path.through_vertices.clear();
  for (std::size_t i = 0; i < path.legs.size(); ++i) {
    const GeodesicLeg& leg = path.legs[i];
    path.length += leg.length;
    path.faces.insert(path.faces.end(), leg.faces.begin(), leg.faces.end());
    path.crossings.insert(path.crossings.end(), leg.crossings.begin(), leg.crossings.end());
    if (i + 1 < path.legs.size()) path.through_vertices.push_back(leg.to);
  }
  const GeodesicStrip strip = unfold_strip(m, path);
  path.unfolded_start = strip.polyline.front();
  path.unfolded_end = strip.polyline.back();
}

std::vector<int> concatenated_faces(const std::vector<int>& pred, const std::vector<GeodesicLeg>& via, int v) {
  std::vector<const GeodesicLeg*> legs;
  for (int x = v; pred[x] != -1; x = pred[x]) legs.push_back(&via[x]);
  std::vector<int> faces;
  for (auto it = legs.rbegin(); it != legs.rend(); ++it) faces.insert(faces.end(), (*it)->faces.begin(), (*it)->faces.end());
  return faces;
}

GeodesicPath search(const ConeMetric& m, int s, int t, const GeodesicOptions& opts) {
  const int n = m.vertex_count();
  std::vector<char> transit(n);
  for (int v = 0; v < n; ++v) transit[v] = angle_sum(m, v) >= kTwoPi - opts.tol.angle;

  double ub = edge_graph_distance(m, s, t);
  const double slack = 1e-9 * std::max(1.0, ub);
  std::vector<double> dist(n, kInf);
  std::vector<int> pred(n, -1);
  std::vector<GeodesicLeg> via(n);
  std::vector<char> settled(n, 0);
  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
  dist[s] = 0.0;
  pq.emplace(0.0, s);
  WindowSearch windows(m, opts.budget);

  while (!pq.empty()) {
    const auto [d, u] = pq.top();
    pq.pop();
    if (settled[u] || d != dist[u]) continue;
    settled[u] = 1;
    if (u == t) break;
    if (u != s && !transit[u]) continue;
    const auto legs = windows.run(u, ub - d + slack, [&](int c) { return !settled[c] && (c == t || transit[c]); });
    for (const auto& [c, leg] : legs) {
      const double nd = d + leg.length;
      const double tie = 1e-9 * std::max(1.0, nd);
      bool take = nd < dist[c] - tie;
      if (!take && nd <= dist[c] + tie) {
        std::vector<int> mine = concatenated_faces(pred, via, u);
        mine.insert(mine.end(), leg.faces.begin(), leg.faces.end());
        take = mine < concatenated_faces(pred, via, c);
      }
      if (!take) continue;
      dist[c] = nd;
      pred[c] = u;
      via[c] = leg;
      pq.emplace(nd, c);
      if (c == t) ub = std::min(ub, nd);
    }
  }
  if (!settled[t]) throw Error(ErrorCode::NumericallyAmbiguous, "geodesic search found no path");

  GeodesicPath path;
  path.source = s;
  path.target = t;
  for (int x = t; pred[x] != -1; x = pred[x]) path.legs.push_back(via[x]);
  std::reverse(path.legs.begin(), path.legs.end());
  assemble(m, path);
  return path;
}

}  // namespace

std::array<Vec2, 3> layout_face(const ConeMetric& metric, int h, const Vec2& tail_pos, const Vec2& head_pos) {
  std::array<Vec2, 3> p;
  const int k = h % 3;
  p[k] = tail_pos;
  p[(k + 1) % 3] = head_pos;
  p[(k + 2) % 3] =
      place_apex(tail_pos, head_pos, metric.length(Triangulation::prev(h)), metric.length(Triangulation::next(h)));
  return p;
}

double angular_position(const ConeMetric& metric, const Direction& d) {
  const Triangulation& tri = metric.triangulation();
  const int v = tri.tail(d.halfedge);
  const int ref = tri.outgoing(v).front();
  double acc = 0.0;
  int h = ref;
  for (int guard = 0; h != d.halfedge; ++guard) {
    if (guard > tri.degree(v)) throw Error(ErrorCode::InvalidInput, "direction halfedge does not leave its vertex");
    acc += metric.corner_angle(h);
    h = tri.rotate_ccw(h);
  }
  return acc + d.angle;
}

GeodesicPath shortest_geodesic(const ConeMetric& metric, int v, int w, const GeodesicOptions& opts) {
  const int n = metric.vertex_count();
  if (v < 0 || w < 0 || v >= n || w >= n) throw Error(ErrorCode::InvalidInput, "vertex index out of range");
  if (v == w) throw Error(ErrorCode::InvalidInput, "geodesic endpoints must differ");
  GeodesicPath path = search(metric, std::min(v, w), std::max(v, w), opts);
  return v < w ? path : reverse_path(metric, path);
}

GeodesicPath reverse_path(const ConeMetric& metric, const GeodesicPath& path) {
  GeodesicPath r;
  r.source = path.target;
  r.target = path.source;
  for (auto it = path.legs.rbegin(); it != path.legs.rend(); ++it) r.legs.push_back(reverse_leg(metric, *it));
  assemble(metric, r);
  r.length = path.length;
  return r;
}

GeodesicStrip unfold_strip(const ConeMetric& metric, const GeodesicPath& path) {
  const Triangulation& tri = metric.triangulation();
  GeodesicStrip strip;
  Vec2 cur = Vec2::Zero();
  Vec2 dir(1.0, 0.0);
  strip.polyline.push_back(cur);
  for (std::size_t i = 0; i < path.legs.size(); ++i) {
    const GeodesicLeg& leg = path.legs[i];
    if (i > 0) {
      const Direction back = reverse_leg(metric, path.legs[i - 1]).start;
      dir = rotated(-dir, angular_position(metric, leg.start) - angular_position(metric, back));
    }
    const int h0 = leg.start.halfedge;
    auto pos = layout_face(metric, h0, cur, cur + metric.length(h0) * rotated(dir, -leg.start.angle));
    strip.faces.push_back(Triangulation::face(h0));
    strip.triangles.push_back(pos);
    for (const EdgeCrossing& c : leg.crossings) {
      const int s = c.halfedge % 3;
      const int h_in = tri.twin(c.halfedge);
      pos = layout_face(metric, h_in, pos[(s + 1) % 3], pos[s]);
      strip.faces.push_back(Triangulation::face(h_in));
      strip.triangles.push_back(pos);
    }
    cur = cur + leg.length * dir;
    strip.polyline.push_back(cur);
  }
  return strip;
}

DistanceMatrix distance_matrix(const ConeMetric& metric, const GeodesicOptions& opts) {
  DistanceMatrix out;
  out.vertices = curvature_report(metric, opts.tol).essential_vertices();
  const auto k = static_cast<Eigen::Index>(out.vertices.size());
  out.distances = Eigen::MatrixXd::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i + 1; j < k; ++j) {
      const double d = shortest_geodesic(metric, out.vertices[i], out.vertices[j], opts).length;
      out.distances(i, j) = d;
      out.distances(j, i) = d;
    }
  }
  return out;
}

}  // namespace alexandrov
