#include "alexandrov/builders.hpp"

#include "alexandrov/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace alexandrov {

namespace {

double diameter(const std::vector<Vec2>& pts) {
  double d = 0.0;
  for (const auto& p : pts) {
    for (const auto& q : pts) d = std::max(d, (p - q).norm());
  }
  return d;
}

double signed_area(const std::vector<Vec2>& pts) {
  double a = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) a += cross(pts[i], pts[(i + 1) % pts.size()]);
  return 0.5 * a;
}

/// Checks strict convexity of a counter-clockwise polygon.
void require_strictly_convex(const std::vector<Vec2>& pts) {
  const std::size_t n = pts.size();
  const double d = diameter(pts);
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e1 = pts[(i + 1) % n] - pts[i];
    const Vec2 e2 = pts[(i + 2) % n] - pts[(i + 1) % n];
    if (e1.norm() <= 1e-12 * d) throw Error(ErrorCode::DegeneratePolygon, "repeated polygon vertex");
    if (cross(e1, e2) <= 1e-12 * d * d) {
      throw Error(ErrorCode::NonConvexPolygon, "polygon is not strictly convex at vertex " + std::to_string((i + 1) % n));
    }
    turning += std::atan2(cross(e1, e2), e1.dot(e2));
  }
  if (std::abs(turning - kTwoPi) > 1e-6) throw Error(ErrorCode::NonConvexPolygon, "polygon is not simple");
}

/// Counter-clockwise order of the polygon's indices; validates the polygon.
std::vector<int> ccw_order(const std::vector<Vec2>& polygon) {
  if (polygon.size() < 3) throw Error(ErrorCode::DegeneratePolygon, "polygon needs at least 3 vertices");
  const double d = diameter(polygon);
  const double area = signed_area(polygon);
  if (!(d > 0.0) || std::abs(area) <= 1e-12 * d * d) throw Error(ErrorCode::DegeneratePolygon, "polygon has no area");
  std::vector<int> order(polygon.size());
  std::iota(order.begin(), order.end(), 0);
  if (area < 0.0) std::reverse(order.begin(), order.end());
  std::vector<Vec2> ccw;
  for (int i : order) ccw.push_back(polygon[i]);
  require_strictly_convex(ccw);
  return order;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

ConeMetric double_polygon(const std::vector<Vec2>& polygon, const Tolerances& tol) {
  const std::vector<int> order = ccw_order(polygon);
  const int n = static_cast<int>(order.size());
  std::vector<Face> faces;
  for (int i = 1; i + 1 < n; ++i) faces.push_back({order[0], order[i], order[i + 1]});
  // Bottom sheet, reversed, fanned from the second corner so that no diagonal repeats.
  for (int j = 2; j < n; ++j) {
    const int a = order[j];
    const int b = order[(j + 1) % n];
    faces.push_back({order[1], b, a});
  }
  EdgeLengthMap lengths;
  for (const Face& f : faces) {
    for (int k = 0; k < 3; ++k) {
      const int a = f[k], b = f[(k + 1) % 3];
      lengths[EdgeKey(a, b)] = (polygon[a] - polygon[b]).norm();
    }
  }
  return build_cone_metric(n, std::move(faces), lengths, tol);
}

ConeMetric glue_polygon(const PolygonGluing& gluing, const Tolerances& tol) {
  if (gluing.doubled) return double_polygon(gluing.polygon, tol);
  const std::vector<Vec2>& poly = gluing.polygon;
  const std::vector<int> order = ccw_order(poly);
  if (order.front() != 0 || (order.size() > 1 && order[1] != 1)) {
    throw Error(ErrorCode::InvalidInput, "glued polygon must be given counter-clockwise");
  }
  const int n = static_cast<int>(poly.size());
  std::vector<double> corner_arc(n + 1, 0.0);
  for (int i = 0; i < n; ++i) corner_arc[i + 1] = corner_arc[i] + (poly[(i + 1) % n] - poly[i]).norm();
  const double perimeter = corner_arc[n];
  const double eps = 1e-9 * perimeter;

  if (gluing.pairs.empty()) throw Error(ErrorCode::InvalidInput, "gluing has no segment pairs");
  std::vector<ArcInterval> intervals;
  for (const SegmentPair& p : gluing.pairs) {
    for (const ArcInterval& iv : {p.first, p.second}) {
      if (!(iv.begin >= -eps && iv.end <= perimeter + eps && iv.end - iv.begin > eps)) {
        throw Error(ErrorCode::InvalidInput, "boundary interval outside [0, perimeter] or empty");
      }
      intervals.push_back(iv);
    }
    const double l1 = p.first.length(), l2 = p.second.length();
    if (std::abs(l1 - l2) > 1e-9 * std::max(l1, l2)) {
      throw Error(ErrorCode::MismatchedSegmentLengths,
                  "paired segments have lengths " + std::to_string(l1) + " and " + std::to_string(l2));
    }
  }
  std::sort(intervals.begin(), intervals.end(), [](const auto& a, const auto& b) { return a.begin < b.begin; });
  double cursor = 0.0;
  for (const auto& iv : intervals) {
    if (std::abs(iv.begin - cursor) > eps) throw Error(ErrorCode::InvalidInput, "segment pairs do not tile the boundary");
    cursor = iv.end;
  }
  if (std::abs(cursor - perimeter) > eps) throw Error(ErrorCode::InvalidInput, "segment pairs do not tile the boundary");

  // Breakpoints closed under the identification.
  std::vector<double> points;
  auto add_point = [&](double x) {
    x = std::clamp(x, 0.0, perimeter);
    if (x > perimeter - eps) x = 0.0;
    for (double y : points) {
      if (std::abs(x - y) <= eps) return false;
    }
    points.push_back(x);
    return true;
  };
  for (int i = 0; i < n; ++i) add_point(corner_arc[i]);
  for (const auto& iv : intervals) {
    add_point(iv.begin);
    add_point(iv.end);
  }
  // image of x under the identification, if x lies strictly inside a glued interval
  auto partner = [&](double x, double& out) {
    for (const SegmentPair& p : gluing.pairs) {
      if (x > p.first.begin + eps && x < p.first.end - eps) {
        out = p.second.end - (x - p.first.begin);
        return true;
      }
      if (x > p.second.begin + eps && x < p.second.end - eps) {
        out = p.first.end - (x - p.second.begin);
        return true;
      }
    }
    return false;
  };
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<double> snapshot = points;
    for (double x : snapshot) {
      double y = 0.0;
      if (partner(x, y) && add_point(y)) grew = true;
    }
    if (points.size() > 10000) throw Error(ErrorCode::InvalidInput, "identification does not close up");
  }
  std::sort(points.begin(), points.end());
  const int m = static_cast<int>(points.size());
  auto index_of = [&](double x) {
    if (x > perimeter - eps) x = 0.0;
    for (int i = 0; i < m; ++i) {
      if (std::abs(points[i] - x) <= 2 * eps) return i;
    }
    throw Error(ErrorCode::InvalidInput, "identification image is not a breakpoint");
  };
  auto position = [&](double x) {
    int i = 0;
    while (i + 1 < n && corner_arc[i + 1] <= x) ++i;
    const double len = corner_arc[i + 1] - corner_arc[i];
    const double u = std::clamp((x - corner_arc[i]) / len, 0.0, 1.0);
    return Vec2(poly[i] + u * (poly[(i + 1) % n] - poly[i]));
  };
  auto image_of_endpoint = [&](double x, const SegmentPair& p, bool in_first) {
    return in_first ? p.second.end - (x - p.first.begin) : p.first.end - (x - p.second.begin);
  };

  UnionFind uf(m);
  std::vector<int> twin_slot(m, -1);  // boundary piece i -> glued piece j
  for (int i = 0; i < m; ++i) {
    const double a = points[i];
    const double b = i + 1 < m ? points[i + 1] : perimeter;
    const double mid = 0.5 * (a + b);
    bool found = false;
    for (const SegmentPair& p : gluing.pairs) {
      for (bool in_first : {true, false}) {
        const ArcInterval& iv = in_first ? p.first : p.second;
        if (mid > iv.begin && mid < iv.end) {
          const double ia = image_of_endpoint(a, p, in_first);
          const double ib = image_of_endpoint(b, p, in_first);
          const int ja = index_of(ia), jb = index_of(ib);
          uf.unite(i, ja);
          uf.unite((i + 1) % m, jb);
          twin_slot[i] = jb;  // image runs from ib to ia, i.e. piece starting at jb
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) throw Error(ErrorCode::InvalidInput, "boundary piece not covered by the gluing");
  }

  std::vector<int> vertex_of(m, -1);
  int next_id = 0;
  for (int i = 0; i < m; ++i) {
    const int r = uf.find(i);
    if (vertex_of[r] < 0) vertex_of[r] = next_id++;
    vertex_of[i] = vertex_of[r];
  }
  const int center = next_id;
  Vec2 centroid = Vec2::Zero();
  for (const auto& p : poly) centroid += p;
  centroid /= static_cast<double>(n);

  std::vector<Face> faces(m);
  std::vector<int> twin(3 * m);
  std::vector<double> hl(3 * m);
  std::vector<Vec2> pos(m);
  for (int i = 0; i < m; ++i) pos[i] = position(points[i]);
  for (int i = 0; i < m; ++i) {
    const int j = (i + 1) % m;
    faces[i] = {center, vertex_of[i], vertex_of[j]};
    twin[3 * i] = 3 * ((i + m - 1) % m) + 2;       // c -> B_i   pairs with   B_i -> c
    twin[3 * ((i + m - 1) % m) + 2] = 3 * i;
    twin[3 * i + 1] = 3 * twin_slot[i] + 1;
    hl[3 * i] = (pos[i] - centroid).norm();
    hl[3 * i + 1] = (pos[j] - pos[i]).norm();
    hl[3 * i + 2] = (pos[j] - centroid).norm();
  }
  for (int i = 0; i < m; ++i) {
    const int o = twin[3 * i + 1];
    if (twin[o] != 3 * i + 1 || std::abs(hl[o] - hl[3 * i + 1]) > 1e-9 * perimeter) {
      throw Error(ErrorCode::MismatchedSegmentLengths, "glued boundary pieces disagree");
    }
  }

  Triangulation tri;
  try {
    tri = Triangulation::from_gluing(center + 1, std::move(faces), std::move(twin));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotSphere || e.code() == ErrorCode::NonManifold) {
      throw Error(ErrorCode::NotSphereAfterGluing, e.what());
    }
    throw;
  }
  std::vector<double> lengths(tri.edge_count());
  for (int e = 0; e < tri.edge_count(); ++e) lengths[e] = hl[tri.edge_halfedge(e)];
  return ConeMetric::from_edge_lengths(std::move(tri), std::move(lengths), tol);
}

PolygonGluing rectangle_gluing() {
  PolygonGluing g;
  g.polygon = {Vec2(0, 0), Vec2(2, 0), Vec2(2, 1), Vec2(0, 1)};
  // Perimeter 6: bottom [0,2], right [2,3], top [3,5], left [5,6]; fold each at its midpoint.
  g.pairs = {
      {{0.0, 1.0}, {1.0, 2.0}},
      {{2.0, 2.5}, {2.5, 3.0}},
      {{3.0, 4.0}, {4.0, 5.0}},
      {{5.0, 5.5}, {5.5, 6.0}},
  };
  return g;
}

ConeMetric star_gluing(int k, double side, const Tolerances& tol) {
  if (k < 3) throw Error(ErrorCode::InvalidInput, "star gluing needs k >= 3");
  if (!(side > 0.0)) throw Error(ErrorCode::InvalidInput, "side must be positive");
  std::vector<Face> faces;
  EdgeLengthMap lengths;
  const int top = 0, bottom = 1;
  for (int i = 0; i < k; ++i) {
    const int a = 2 + i, b = 2 + (i + 1) % k;
    faces.push_back({top, a, b});
    faces.push_back({bottom, b, a});
    lengths[EdgeKey(top, a)] = side;
    lengths[EdgeKey(bottom, a)] = side;
    lengths[EdgeKey(a, b)] = side;
  }
  return build_cone_metric(k + 2, std::move(faces), lengths, tol);
}

}  // namespace alexandrov
