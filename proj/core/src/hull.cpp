#include "alexandrov/error.hpp"
#include "alexandrov/polyhedron.hpp"
#include "alexandrov/predicates.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <utility>

namespace alexandrov {

namespace {

double point_diameter(const std::vector<Vec3>& pts) {
  Vec3 lo = pts.front(), hi = pts.front();
  for (const auto& p : pts) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  return (hi - lo).norm();
}

using Tri = std::array<int, 3>;

}  // namespace

std::vector<HullFacet> convex_hull_3d(const std::vector<Vec3>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 4) throw Error(ErrorCode::TooFewPoints, "hull needs at least 4 points");

  // Initial simplex, picked in input order.
  int i0 = 0, i1 = -1, i2 = -1, i3 = -1;
  for (int i = 1; i < n && i1 < 0; ++i) {
    if (pts[i] != pts[i0]) i1 = i;
  }
  if (i1 < 0) throw Error(ErrorCode::DegenerateInput, "all points coincide");
  for (int i = 0; i < n && i2 < 0; ++i) {
    if (!collinear(pts[i0], pts[i1], pts[i])) i2 = i;
  }
  if (i2 < 0) throw Error(ErrorCode::DegenerateInput, "all points are collinear");
  int o = 0;
  for (int i = 0; i < n && i3 < 0; ++i) {
    o = orient3d(pts[i0], pts[i1], pts[i2], pts[i]);
    if (o != 0) i3 = i;
  }
  if (i3 < 0) throw Error(ErrorCode::DegenerateInput, "all points are coplanar");
  if (o > 0) std::swap(i1, i2);  // make (i0, i1, i2) face away from i3

  std::vector<Tri> tris{{i0, i1, i2}, {i0, i3, i1}, {i1, i3, i2}, {i2, i3, i0}};
  std::vector<char> used(n, 0);
  used[i0] = used[i1] = used[i2] = used[i3] = 1;

  for (int p = 0; p < n; ++p) {
    if (used[p]) continue;
    std::vector<char> visible(tris.size(), 0);
    bool any = false;
    for (std::size_t f = 0; f < tris.size(); ++f) {
      const Tri& t = tris[f];
      if (orient3d(pts[t[0]], pts[t[1]], pts[t[2]], pts[p]) > 0) {
        visible[f] = 1;
        any = true;
      }
    }
    if (!any) continue;  // inside or on the current hull
    std::map<std::pair<int, int>, char> visible_edges;
    for (std::size_t f = 0; f < tris.size(); ++f) {
      if (!visible[f]) continue;
      for (int k = 0; k < 3; ++k) visible_edges[{tris[f][k], tris[f][(k + 1) % 3]}] = 1;
    }
    std::vector<Tri> next;
    for (std::size_t f = 0; f < tris.size(); ++f) {
      if (!visible[f]) next.push_back(tris[f]);
    }
    for (std::size_t f = 0; f < tris.size(); ++f) {
      if (!visible[f]) continue;
      for (int k = 0; k < 3; ++k) {
        const int a = tris[f][k], b = tris[f][(k + 1) % 3];
        if (!visible_edges.count({b, a})) next.push_back({a, b, p});
      }
    }
    tris = std::move(next);
    used[p] = 1;
  }

  // Merge coplanar neighbours.
  const double diam = point_diameter(pts);
  const double plane_tol = 1e-9 * diam;
  const int nt = static_cast<int>(tris.size());
  std::map<std::pair<int, int>, int> owner;
  for (int f = 0; f < nt; ++f) {
    for (int k = 0; k < 3; ++k) owner[{tris[f][k], tris[f][(k + 1) % 3]}] = f;
  }
  std::vector<int> group(nt);
  std::iota(group.begin(), group.end(), 0);
  auto find = [&](int x) {
    while (group[x] != x) x = group[x] = group[group[x]];
    return x;
  };
  auto distance_to_plane = [&](const Tri& t, int q) {
    const Vec3 nrm = (pts[t[1]] - pts[t[0]]).cross(pts[t[2]] - pts[t[0]]);
    const double len = nrm.norm();
    return len > 0.0 ? std::abs(nrm.dot(pts[q] - pts[t[0]])) / len : 0.0;
  };
  for (int f = 0; f < nt; ++f) {
    for (int k = 0; k < 3; ++k) {
      const int a = tris[f][k], b = tris[f][(k + 1) % 3];
      const int g = owner.at({b, a});
      if (g <= f) continue;
      int far = -1;
      for (int v : tris[g]) {
        if (v != a && v != b) far = v;
      }
      const Tri& t = tris[f];
      const bool coplanar = orient3d(pts[t[0]], pts[t[1]], pts[t[2]], pts[far]) == 0 ||
                            distance_to_plane(t, far) <= plane_tol;
      if (coplanar) {
        const int ra = find(f), rb = find(g);
        if (ra != rb) group[std::max(ra, rb)] = std::min(ra, rb);
      }
    }
  }

  std::map<int, std::vector<int>> members;
  for (int f = 0; f < nt; ++f) members[find(f)].push_back(f);

  std::vector<HullFacet> facets;
  for (const auto& [root, fs] : members) {
    (void)root;
    std::map<int, int> succ;
    for (int f : fs) {
      for (int k = 0; k < 3; ++k) {
        const int a = tris[f][k], b = tris[f][(k + 1) % 3];
        const int g = owner.at({b, a});
        if (find(g) != find(f)) succ[a] = b;
      }
    }
    if (succ.empty()) throw Error(ErrorCode::DegenerateInput, "facet without boundary");
    std::vector<int> cycle;
    const int start = succ.begin()->first;
    int v = start;
    do {
      cycle.push_back(v);
      const auto it = succ.find(v);
      if (it == succ.end() || cycle.size() > succ.size()) {
        throw Error(ErrorCode::DegenerateInput, "facet boundary is not a single cycle");
      }
      v = it->second;
    } while (v != start);
    if (cycle.size() != succ.size()) throw Error(ErrorCode::DegenerateInput, "facet boundary is not a single cycle");

    // Drop points that are not strict corners of the facet.
    Vec3 normal = Vec3::Zero();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      normal += pts[cycle[i]].cross(pts[cycle[(i + 1) % cycle.size()]]);
    }
    normal.normalize();
    for (bool changed = true; changed && cycle.size() > 3;) {
      changed = false;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Vec3& a = pts[cycle[(i + cycle.size() - 1) % cycle.size()]];
        const Vec3& b = pts[cycle[i]];
        const Vec3& c = pts[cycle[(i + 1) % cycle.size()]];
        const double turn = (b - a).cross(c - b).dot(normal);
        if (turn <= 1e-9 * diam * std::max((b - a).norm(), (c - b).norm())) {
          cycle.erase(cycle.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
      }
    }
    facets.push_back(HullFacet{std::move(cycle)});
  }
  return facets;
}

}  // namespace alexandrov
