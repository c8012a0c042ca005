#include "alexandrov/sampling.hpp"

#include "alexandrov/error.hpp"
#include "alexandrov/mesh_editor.hpp"
#include "alexandrov/polyhedron.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace alexandrov {

namespace {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Eigen::Matrix3d random_rotation(Rng& rng) {
  std::normal_distribution<double> normal;
  Eigen::Quaterniond q(normal(rng), normal(rng), normal(rng), normal(rng));
  q.normalize();
  return q.toRotationMatrix();
}

double tetra_volume(const std::vector<Vec3>& p) {
  return std::abs((p[1] - p[0]).cross(p[2] - p[0]).dot(p[3] - p[0])) / 6.0;
}

double min_pair_distance(const std::vector<Vec3>& p) {
  double d = 1e300;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) d = std::min(d, (p[i] - p[j]).norm());
  }
  return d;
}

int random_alive_face(const MeshEditor& ed, Rng& rng) {
  for (;;) {
    const int f = uniform_int(rng, 0, ed.face_slots() - 1);
    if (ed.face_alive(f)) return f;
  }
}

}  // namespace

std::vector<Vec3> random_sphere_points(int n, Rng& rng) {
  std::normal_distribution<double> normal;
  std::vector<Vec3> pts;
  while (static_cast<int>(pts.size()) < n) {
    const Vec3 p(normal(rng), normal(rng), normal(rng));
    if (p.norm() < 1e-6) continue;
    const Vec3 u = p.normalized();
    bool close = false;
    for (const auto& q : pts) close = close || (q - u).norm() < 0.05;
    if (!close) pts.push_back(u);
  }
  return pts;
}

std::vector<Vec3> random_tetrahedron(Rng& rng, bool nearly_flat) {
  const Eigen::Matrix3d rot = random_rotation(rng);
  for (;;) {
    std::vector<Vec3> p;
    if (nearly_flat) {
      for (int i = 0; i < 3; ++i) p.emplace_back(uniform(rng, -1, 1), uniform(rng, -1, 1), 0.0);
      p.emplace_back(uniform(rng, -1, 1), uniform(rng, -1, 1), 0.0);
      double diam = 0.0;
      for (const auto& a : p) {
        for (const auto& b : p) diam = std::max(diam, (a - b).norm());
      }
      p[3].z() = uniform(rng, 1e-4, 1e-3) * diam;
      const double base_area = 0.5 * (p[1] - p[0]).cross(p[2] - p[0]).norm();
      if (base_area < 0.2 || min_pair_distance(p) < 0.2) continue;
    } else {
      for (int i = 0; i < 4; ++i) p.emplace_back(uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1));
      if (tetra_volume(p) < 0.02 || min_pair_distance(p) < 0.2) continue;
    }
    for (auto& x : p) x = rot * x;
    return p;
  }
}

std::vector<Vec2> random_convex_polygon(int k, Rng& rng) {
  if (k < 3) throw Error(ErrorCode::InvalidInput, "a polygon needs at least 3 corners");
  const double radius = uniform(rng, 0.5, 2.0);
  for (;;) {
    std::vector<double> angles;
    for (int i = 0; i < k; ++i) angles.push_back(uniform(rng, 0.0, kTwoPi));
    std::sort(angles.begin(), angles.end());
    bool ok = true;
    for (int i = 0; i < k; ++i) {
      const double gap = i + 1 < k ? angles[i + 1] - angles[i] : angles[0] + kTwoPi - angles[i];
      ok = ok && gap > 0.2 / k && gap < kPi - 0.05;
    }
    if (!ok) continue;
    std::vector<Vec2> poly;
    for (double a : angles) poly.emplace_back(radius * std::cos(a), radius * std::sin(a));
    return poly;
  }
}

ConeMetric relabel(const ConeMetric& metric, const std::vector<int>& perm) {
  const Triangulation& tri = metric.triangulation();
  if (static_cast<int>(perm.size()) != tri.vertex_count()) throw Error(ErrorCode::InvalidInput, "permutation size mismatch");
  std::vector<Face> faces = tri.faces();
  for (auto& f : faces) {
    for (int& v : f) v = perm[v];
  }
  Triangulation out = Triangulation::from_gluing(tri.vertex_count(), std::move(faces), tri.twins());
  std::vector<double> lengths(out.edge_count());
  for (int e = 0; e < out.edge_count(); ++e) lengths[e] = metric.length(out.edge_halfedge(e));
  return ConeMetric::from_edge_lengths(std::move(out), std::move(lengths));
}

ConeMetric random_relabel(const ConeMetric& metric, Rng& rng) {
  std::vector<int> perm(metric.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(metric, perm);
}

ConeMetric random_subdivision(const ConeMetric& metric, int count, Rng& rng) {
  MeshEditor ed(metric);
  for (int i = 0; i < count; ++i) {
    const int f = random_alive_face(ed, rng);
    if (uniform(rng, 0.0, 1.0) < 0.5) {
      std::array<double, 3> bary{uniform(rng, 0.2, 1.0), uniform(rng, 0.2, 1.0), uniform(rng, 0.2, 1.0)};
      const double s = bary[0] + bary[1] + bary[2];
      for (double& b : bary) b /= s;
      ed.insert_in_face(f, bary);
    } else {
      const int h = 3 * f + uniform_int(rng, 0, 2);
      if (MeshEditor::face(ed.twin(h)) == f) continue;
      ed.split_edge(h, uniform(rng, 0.25, 0.75));
    }
  }
  return ed.to_metric();
}

ConeMetric random_flips(const ConeMetric& metric, int count, Rng& rng) {
  MeshEditor ed(metric);
  for (int i = 0; i < count; ++i) {
    const int h = 3 * random_alive_face(ed, rng) + uniform_int(rng, 0, 2);
    if (!ed.flippable(h, 1e-3)) continue;
    ed.flip(h);
  }
  return ed.to_metric();
}

ConeMetric random_four_vertex_metric(Rng& rng, bool nearly_flat) {
  ConeMetric m = iota(canonicalize_polyhedron(random_tetrahedron(rng, nearly_flat)));
  m = random_relabel(m, rng);
  m = random_subdivision(m, uniform_int(rng, 0, 3), rng);
  return random_flips(m, uniform_int(rng, 0, 4), rng);
}

}  // namespace alexandrov
