#include "alexandrov/correspondence.hpp"

#include "alexandrov/curvature.hpp"
#include "alexandrov/error.hpp"
#include "alexandrov/mesh_editor.hpp"
#include "alexandrov/polyhedron.hpp"
#include "alexandrov/retriangulation.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <optional>
#include <set>
#include <tuple>

namespace alexandrov {

namespace {

constexpr std::array<std::array<int, 2>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

int pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  for (int k = 0; k < 6; ++k) {
    if (kPairs[k][0] == i && kPairs[k][1] == j) return k;
  }
  return -1;
}

using StateKey = std::vector<std::tuple<int, int, long long>>;

StateKey state_key(const EssentialTriangulation& et) {
  const Triangulation& tri = et.metric.triangulation();
  const double scale = et.metric.max_edge_length();
  StateKey key;
  for (int e = 0; e < tri.edge_count(); ++e) {
    const int h = tri.edge_halfedge(e);
    const int a = et.source_vertex[tri.tail(h)], b = et.source_vertex[tri.head(h)];
    key.emplace_back(std::min(a, b), std::max(a, b), std::llround(et.metric.edge_length(e) / scale * 1e9));
  }
  std::sort(key.begin(), key.end());
  return key;
}

// Coordinates from the six lengths of a simplicial four-vertex triangulation.
std::optional<EmbeddingResult> realize(const EssentialTriangulation& et) {
  const Triangulation& tri = et.metric.triangulation();
  if (tri.vertex_count() != 4 || tri.edge_count() != 6) return std::nullopt;
  std::array<double, 6> d{};
  std::array<bool, 6> seen{};
  for (int e = 0; e < 6; ++e) {
    const int h = tri.edge_halfedge(e);
    const int k = tri.tail(h) == tri.head(h) ? -1 : pair_index(tri.tail(h), tri.head(h));
    if (k < 0 || seen[k]) return std::nullopt;
    seen[k] = true;
    d[k] = et.metric.edge_length(e);
  }
  const double diam = *std::max_element(d.begin(), d.end());
  const double scale6 = std::pow(diam, 6);
  EmbeddingResult res;
  res.cayley_menger = cayley_menger(d);
  if (res.cayley_menger < -1e-12 * scale6) return std::nullopt;
  res.degenerate = std::abs(res.cayley_menger) <= 1e-12 * scale6;

  auto dist = [&](int i, int j) { return i == j ? 0.0 : d[pair_index(i, j)]; };
  // Base triangle of largest area keeps the factorization well conditioned.
  std::array<int, 4> perm{0, 1, 2, 3};
  double best = -1.0;
  for (int skip = 3; skip >= 0; --skip) {
    std::array<int, 4> q{};
    int n = 0;
    for (int i = 0; i < 4; ++i) {
      if (i != skip) q[n++] = i;
    }
    q[3] = skip;
    const double area = triangle_area(dist(q[0], q[1]), dist(q[1], q[2]), dist(q[0], q[2]));
    if (area > best) {
      best = area;
      perm = q;
    }
  }
  // Cholesky factor of the Gram matrix anchored at perm[0]; rows are coordinates.
  Eigen::Matrix3d gram;
  for (int i = 1; i < 4; ++i) {
    for (int j = 1; j < 4; ++j) {
      const double a = dist(perm[0], perm[i]), b = dist(perm[0], perm[j]), c = dist(perm[i], perm[j]);
      gram(i - 1, j - 1) = 0.5 * (a * a + b * b - c * c);
    }
  }
  Eigen::Matrix3d L = Eigen::Matrix3d::Zero();
  L(0, 0) = std::sqrt(std::max(0.0, gram(0, 0)));
  L(1, 0) = gram(1, 0) / L(0, 0);
  L(1, 1) = std::sqrt(std::max(0.0, gram(1, 1) - L(1, 0) * L(1, 0)));
  L(2, 0) = gram(2, 0) / L(0, 0);
  L(2, 1) = (gram(2, 1) - L(2, 0) * L(1, 0)) / L(1, 1);
  L(2, 2) = res.degenerate ? 0.0 : std::sqrt(std::max(0.0, gram(2, 2) - L(2, 0) * L(2, 0) - L(2, 1) * L(2, 1)));
  if (!L.allFinite()) return std::nullopt;

  res.points[perm[0]] = Vec3::Zero();
  for (int i = 1; i < 4; ++i) res.points[perm[i]] = L.row(i - 1).transpose();
  for (int i = 0; i < 4; ++i) res.vertices[i] = et.source_vertex[i];
  for (int k = 0; k < 6; ++k) {
    const double got = (res.points[kPairs[k][0]] - res.points[kPairs[k][1]]).norm();
    res.residuals[k] = std::abs(got - d[k]);
    res.max_residual = std::max(res.max_residual, res.residuals[k]);
  }
  if (res.max_residual > 1e-8 * diam) return std::nullopt;
  Eigen::Matrix3d frame;
  frame << res.points[1] - res.points[0], res.points[2] - res.points[0], res.points[3] - res.points[0];
  res.signed_volume = frame.determinant() / 6.0;
  return res;
}

bool verified(const EmbeddingResult& res, const IsometryFingerprint& target, const EmbedOptions& opts) {
  try {
    const Polyhedron poly = canonicalize_polyhedron({res.points.begin(), res.points.end()});
    if (poly.points.size() != 4) return false;
    return fingerprints_match(fingerprint(iota(poly, opts.geodesic.tol), opts.geodesic), target, opts.verify_tol);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

double cayley_menger(const std::array<double, 6>& d) {
  Eigen::Matrix<double, 5, 5> cm = Eigen::Matrix<double, 5, 5>::Ones();
  for (int i = 0; i < 5; ++i) cm(i, i) = 0.0;
  for (int k = 0; k < 6; ++k) {
    const int i = kPairs[k][0] + 1, j = kPairs[k][1] + 1;
    cm(i, j) = cm(j, i) = d[k] * d[k];
  }
  return cm.determinant();
}

EmbeddingResult embed4(const ConeMetric& metric, const EmbedOptions& opts) {
  const Tolerances& tol = opts.geodesic.tol;
  const PsiCheck psi = is_in_psi(metric, tol);
  if (!psi.admissible) throw Error(ErrorCode::NotAdmissible, "metric has a vertex with angle sum above 2pi");
  const int n = curvature_report(metric, tol).essential_count();
  if (n != 4) throw Error(ErrorCode::WrongVertexCount, "expected 4 essential vertices, found " + std::to_string(n));

  const IsometryFingerprint target = fingerprint(metric, opts.geodesic);
  std::deque<EssentialTriangulation> queue;
  queue.push_back(retriangulate_essential(metric, tol));
  std::set<StateKey> seen{state_key(queue.front())};
  std::size_t visited = 0;
  bool rejected = false;
  while (!queue.empty()) {
    const EssentialTriangulation cur = std::move(queue.front());
    queue.pop_front();
    ++visited;
    if (auto res = realize(cur)) {
      if (verified(*res, target, opts)) {
        res->triangulations_visited = visited;
        return *res;
      }
      rejected = true;
    }
    const MeshEditor ed(cur.metric);
    const Triangulation& tri = cur.metric.triangulation();
    for (int e = 0; e < tri.edge_count(); ++e) {
      if (!ed.flippable(tri.edge_halfedge(e))) continue;
      std::optional<EssentialTriangulation> next;
      try {
        next = edge_flip(cur, e, tol);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::NumericallyAmbiguous && err.code() != ErrorCode::NotFlippable) throw;
        continue;
      }
      if (!seen.insert(state_key(*next)).second) continue;
      if (seen.size() > opts.flip_budget) {
        throw Error(ErrorCode::FlipSearchExhausted, "flip search exceeded " + std::to_string(opts.flip_budget) + " triangulations");
      }
      queue.push_back(std::move(*next));
    }
  }
  if (rejected) throw Error(ErrorCode::VerificationFailed, "no realizable triangulation reproduces the metric");
  throw Error(ErrorCode::FlipSearchExhausted, "flip graph has no realizable triangulation");
}

IsometryFingerprint fingerprint(const ConeMetric& metric, const GeodesicOptions& opts) {
  IsometryFingerprint fp;
  fp.deficits = curvature_report(metric, opts.tol).sorted_essential_deficits();
  const DistanceMatrix dm = distance_matrix(metric, opts);
  for (Eigen::Index i = 0; i < dm.distances.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < dm.distances.cols(); ++j) fp.distances.push_back(dm.distances(i, j));
  }
  std::sort(fp.distances.begin(), fp.distances.end());
  fp.area = metric.total_area();
  return fp;
}

double fingerprint_distance(const IsometryFingerprint& a, const IsometryFingerprint& b) {
  if (a.deficits.size() != b.deficits.size() || a.distances.size() != b.distances.size()) {
    return std::numeric_limits<double>::infinity();
  }
  auto rel = [](double x, double y) { return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)}); };
  double worst = rel(a.area, b.area);
  for (std::size_t i = 0; i < a.deficits.size(); ++i) worst = std::max(worst, rel(a.deficits[i], b.deficits[i]));
  for (std::size_t i = 0; i < a.distances.size(); ++i) worst = std::max(worst, rel(a.distances[i], b.distances[i]));
  return worst;
}

bool fingerprints_match(const IsometryFingerprint& a, const IsometryFingerprint& b, double tol) {
  return fingerprint_distance(a, b) <= tol;
}

std::string_view to_string(Verdict v) { return v == Verdict::Distinct ? "distinct" : "consistent"; }

Verdict probably_isometric(const ConeMetric& a, const ConeMetric& b, double tol, const GeodesicOptions& opts) {
  return fingerprints_match(fingerprint(a, opts), fingerprint(b, opts), tol) ? Verdict::Consistent : Verdict::Distinct;
}

}  // namespace alexandrov
