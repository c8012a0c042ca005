#include "alexandrov/polyhedron.hpp"

#include "alexandrov/builders.hpp"
#include "alexandrov/error.hpp"
#include "alexandrov/predicates.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace alexandrov {

namespace {

bool lex_less(const Vec3& a, const Vec3& b) {
  return std::lexicographical_compare(a.data(), a.data() + 3, b.data(), b.data() + 3);
}

double point_diameter(const std::vector<Vec3>& pts) {
  double d = 0.0;
  for (const auto& p : pts) {
    for (const auto& q : pts) d = std::max(d, (p - q).norm());
  }
  return d;
}

struct PlaneFrame {
  Vec3 origin, u, v, normal;
};

PlaneFrame plane_frame(const Vec3& origin, const Vec3& normal_in) {
  Vec3 normal = normal_in.normalized();
  int big = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(normal[i]) > std::abs(normal[big])) big = i;
  }
  if (normal[big] < 0) normal = -normal;
  // In-plane basis independent of the point order.
  Vec3 helper = std::abs(normal.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 u = (helper - helper.dot(normal) * normal).normalized();
  return PlaneFrame{origin, u, normal.cross(u), normal};
}

Vec2 project(const PlaneFrame& f, const Vec3& p) { return Vec2((p - f.origin).dot(f.u), (p - f.origin).dot(f.v)); }

}  // namespace

Polyhedron canonicalize_polyhedron(const std::vector<Vec3>& input) {
  std::vector<Vec3> pts;
  for (const auto& p : input) {
    if (!p.allFinite()) throw Error(ErrorCode::InvalidInput, "non-finite coordinate");
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  if (pts.size() < 3) throw Error(ErrorCode::TooFewPoints, "need at least 3 distinct points");
  std::sort(pts.begin(), pts.end(), lex_less);

  bool all_collinear = true;
  for (std::size_t i = 2; i < pts.size() && all_collinear; ++i) {
    all_collinear = collinear(pts[0], pts[pts.size() - 1], pts[i]);
  }
  if (all_collinear) throw Error(ErrorCode::CollinearInput, "all points are collinear");

  const double diam = point_diameter(pts);
  // Reference plane through a well-shaped triangle.
  std::size_t a = 0, b = 0, c = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if ((pts[i] - pts[a]).norm() > (pts[b] - pts[a]).norm()) b = i;
  }
  double best = -1.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double area = (pts[b] - pts[a]).cross(pts[i] - pts[a]).norm();
    if (area > best) {
      best = area;
      c = i;
    }
  }
  const Vec3 normal = (pts[b] - pts[a]).cross(pts[c] - pts[a]).normalized();
  double max_offset = 0.0;
  for (const auto& p : pts) max_offset = std::max(max_offset, std::abs(normal.dot(p - pts[a])));

  Polyhedron out;
  if (max_offset <= 1e-9 * diam) {
    const PlaneFrame frame = plane_frame(pts[a], normal);
    std::vector<Vec2> q;
    for (const auto& p : pts) q.push_back(project(frame, p));
    // Monotone chain on the projected points (already in a fixed order).
    std::vector<int> idx(pts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
      return q[i].x() < q[j].x() || (q[i].x() == q[j].x() && q[i].y() < q[j].y());
    });
    auto turn_ok = [&](int o, int p, int r) {
      const Vec2 e1 = q[p] - q[o], e2 = q[r] - q[p];
      return cross(e1, e2) > 1e-9 * diam * std::max(e1.norm(), e2.norm());
    };
    std::vector<int> hull;
    for (int pass = 0; pass < 2; ++pass) {
      const std::size_t base = hull.size();
      for (int i : idx) {
        while (hull.size() >= base + 2 && !turn_ok(hull[hull.size() - 2], hull.back(), i)) hull.pop_back();
        hull.push_back(i);
      }
      hull.pop_back();
      std::reverse(idx.begin(), idx.end());
    }
    if (hull.size() < 3) throw Error(ErrorCode::CollinearInput, "points span no area");
    // Start from the lexicographically smallest 3D point (index order is lexicographic).
    const auto first = std::min_element(hull.begin(), hull.end());
    std::rotate(hull.begin(), first, hull.end());
    for (int i : hull) out.points.push_back(pts[i]);
    out.degenerate = true;
    out.plane_normal = frame.normal;
    return out;
  }

  const std::vector<HullFacet> facets = convex_hull_3d(pts);
  std::vector<char> corner(pts.size(), 0);
  for (const auto& f : facets) {
    for (int v : f.vertices) corner[v] = 1;
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (corner[i]) out.points.push_back(pts[i]);
  }
  return out;
}

std::vector<Vec2> planar_coordinates(const Polyhedron& p) {
  if (!p.degenerate) throw Error(ErrorCode::InvalidInput, "polyhedron is not planar");
  const PlaneFrame frame = plane_frame(p.points.front(), p.plane_normal);
  std::vector<Vec2> out;
  for (const auto& x : p.points) out.push_back(project(frame, x));
  return out;
}

std::vector<HullFacet> polyhedron_facets(const Polyhedron& p) {
  if (!p.degenerate) return convex_hull_3d(p.points);
  HullFacet top, bottom;
  for (int i = 0; i < static_cast<int>(p.points.size()); ++i) top.vertices.push_back(i);
  bottom.vertices.assign(top.vertices.rbegin(), top.vertices.rend());
  return {top, bottom};
}

ConeMetric iota(const Polyhedron& p, const Tolerances& tol) {
  if (p.degenerate) return double_polygon(planar_coordinates(p), tol);
  const std::vector<HullFacet> facets = convex_hull_3d(p.points);
  std::vector<Face> faces;
  EdgeLengthMap lengths;
  for (const HullFacet& f : facets) {
    std::vector<int> cyc = f.vertices;
    std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
    for (std::size_t i = 1; i + 1 < cyc.size(); ++i) faces.push_back({cyc[0], cyc[i], cyc[i + 1]});
  }
  for (const Face& f : faces) {
    for (int k = 0; k < 3; ++k) {
      const int a = f[k], b = f[(k + 1) % 3];
      lengths[EdgeKey(a, b)] = (p.points[a] - p.points[b]).norm();
    }
  }
  return build_cone_metric(static_cast<int>(p.points.size()), std::move(faces), lengths, tol);
}

double surface_area(const Polyhedron& p) {
  double total = 0.0;
  for (const HullFacet& f : polyhedron_facets(p)) {
    Vec3 acc = Vec3::Zero();
    for (std::size_t i = 0; i < f.vertices.size(); ++i) {
      acc += p.points[f.vertices[i]].cross(p.points[f.vertices[(i + 1) % f.vertices.size()]]);
    }
    total += 0.5 * acc.norm();
  }
  return total;
}

}  // namespace alexandrov
