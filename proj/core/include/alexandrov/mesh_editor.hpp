#pragma once

#include "alexandrov/cone_metric.hpp"
#include "alexandrov/geometry.hpp"

#include <array>
#include <optional>
#include <vector>

namespace alexandrov {

/// A tangent direction at a vertex: `angle` radians counter-clockwise from
/// `halfedge` (whose tail is the vertex), within that halfedge's face corner.
struct Direction {
  int halfedge = -1;
  double angle = 0.0;
};

/// A point where a path crosses the interior of an edge, at parameter `t`
/// along `halfedge` (tail = 0, head = 1).
struct EdgeCrossing {
  int halfedge = -1;
  double t = 0.0;
};

/// Mutable halfedge mesh with per-halfedge lengths, used by the algorithms that
/// edit triangulations (edge splits, flips, vertex removal). Optionally tracks
/// signpost angles: the direction of each halfedge at its tail, measured from a
/// per-vertex reference direction, which survives flips and removals.
class MeshEditor {
 public:
  explicit MeshEditor(const ConeMetric& metric, bool track_signposts = false);

  [[nodiscard]] int vertex_count() const noexcept { return vertex_count_; }
  [[nodiscard]] int face_slots() const noexcept { return static_cast<int>(faces_.size()); }
  [[nodiscard]] bool face_alive(int f) const { return alive_[f] != 0; }

  [[nodiscard]] static int next(int h) noexcept { return Triangulation::next(h); }
  [[nodiscard]] static int prev(int h) noexcept { return Triangulation::prev(h); }
  [[nodiscard]] static int face(int h) noexcept { return h / 3; }
  [[nodiscard]] int twin(int h) const { return twin_[h]; }
  [[nodiscard]] int tail(int h) const { return faces_[h / 3][h % 3]; }
  [[nodiscard]] int head(int h) const { return faces_[h / 3][(h % 3 + 1) % 3]; }
  [[nodiscard]] double length(int h) const { return hlen_[h]; }
  [[nodiscard]] const Face& face_vertices(int f) const { return faces_[f]; }
  [[nodiscard]] int rotate_ccw(int h) const { return twin_[prev(h)]; }
  [[nodiscard]] int rotate_cw(int h) const { return next(twin_[h]); }
  [[nodiscard]] int vertex_halfedge(int v) const { return vertex_halfedge_[v]; }

  [[nodiscard]] double corner_angle(int h) const;
  [[nodiscard]] double angle_sum(int v) const;
  [[nodiscard]] int degree(int v) const;
  [[nodiscard]] std::vector<int> outgoing(int v) const;
  [[nodiscard]] double face_area(int f) const;

  /// Planar positions of the corners of face(h) (indexed by slot) with tail(h)
  /// at `tail_pos` and head(h) at `head_pos`.
  [[nodiscard]] std::array<Vec2, 3> layout(int h, const Vec2& tail_pos, const Vec2& head_pos) const;

  struct Split {
    int vertex = -1;
    int to_opposite = -1;       // new halfedge from the split point to the vertex opposite `h`
    int to_twin_opposite = -1;  // same on the other side
    int to_tail = -1;           // split point -> tail(h)
    int to_head = -1;           // split point -> head(h)
  };
  /// Inserts a vertex on the edge of `h` at parameter `t` from tail(h).
  Split split_edge(int h, double t);

  /// Inserts a vertex inside face `f` at barycentric coordinates (slot order).
  int insert_in_face(int f, const std::array<double, 3>& bary);

  /// True when the two triangles of `h` unfold to a strictly convex quadrilateral.
  [[nodiscard]] bool flippable(int h, double rel_tol = 1e-10) const;
  /// Length the flipped diagonal would have.
  [[nodiscard]] double flipped_length(int h) const;
  /// Flips the edge of `h`; returns the new diagonal halfedge. Throws NotFlippable.
  int flip(int h);

  /// Removes a vertex of degree three, merging its three triangles.
  void remove_degree3_vertex(int v);
  /// Removes a flat vertex by unfolding its star into the plane and
  /// ear-clipping the star polygon. Throws NumericallyAmbiguous when the star
  /// does not unfold to a simple polygon.
  void remove_vertex_planar(int v);
  [[nodiscard]] bool vertex_alive(int v) const { return vertex_alive_[v] != 0; }

  [[nodiscard]] bool tracks_signposts() const noexcept { return !signpost_.empty(); }
  [[nodiscard]] double signpost(int h) const { return signpost_[h]; }
  [[nodiscard]] const std::vector<double>& signposts() const noexcept { return signpost_; }
  /// Replaces all signposts (one per halfedge slot), e.g. ones carried over
  /// from an earlier edit session of the same surface.
  void load_signposts(std::vector<double> angles);

  /// Rotates a direction about its vertex by `delta` radians (CCW positive).
  [[nodiscard]] Direction rotate(Direction d, double delta) const;
  /// Direction at tail(h) given a signpost angle.
  [[nodiscard]] Direction direction_from_signpost(int vertex, double angle) const;

  /// Compacted copy as a validated metric; `vertex_map` receives old -> new
  /// vertex ids (-1 for removed vertices) and `halfedge_map` old -> new halfedges.
  ConeMetric to_metric(const Tolerances& tol = {}, std::vector<int>* vertex_map = nullptr,
                       std::vector<int>* halfedge_map = nullptr) const;

 private:
  void set_signpost_cw(int h);
  void reset_vertex_frame(int reference);
  void relink(const std::vector<std::pair<int, int>>& moves, const std::vector<int>& old_twin);

  int vertex_count_ = 0;
  std::vector<Face> faces_;
  std::vector<int> twin_;
  std::vector<double> hlen_;
  std::vector<char> alive_;
  std::vector<int> vertex_halfedge_;
  std::vector<char> vertex_alive_;
  std::vector<double> signpost_;
  std::vector<double> vertex_angle_;  // angle sums, fixed for tracked vertices
};

/// Ray/segment hit in a planar layout.
struct RayHit {
  double s = 0.0;  // distance along the (unit) ray
  double t = 0.0;  // parameter along the segment
  bool valid = false;
};
RayHit intersect_ray_segment(const Vec2& origin, const Vec2& dir, const Vec2& p, const Vec2& q);

/// Straight-line walk from a vertex along a direction for a given length.
struct TraceResult {
  std::vector<int> faces;
  std::vector<EdgeCrossing> crossings;
  std::vector<int> through_vertices;
  bool ends_at_vertex = false;
  int end_vertex = -1;
  int end_face = -1;
  double end_error = 0.0;  // distance from the end point to end_vertex
};

/// Traces a straight line; passes through flat vertices and throws
/// NumericallyAmbiguous when it runs into a cone point before `length`.
TraceResult trace_straight(const MeshEditor& mesh, Direction start, double length);

/// Result of inserting a straight segment as a chain of mesh edges.
struct InsertedChain {
  std::vector<int> vertices;   // start, inserted/visited vertices, end
  std::vector<int> halfedges;  // halfedges[i] runs from vertices[i] to vertices[i+1]
  std::vector<double> arc;     // distance from the start to each chain vertex
};

/// Walks a straight segment and splits every crossed edge so that the segment
/// becomes a chain of edges. Returns nullopt if the segment does not end at a
/// vertex (within tolerance) or hits a cone point on the way.
std::optional<InsertedChain> insert_straight(MeshEditor& mesh, Direction start, double length);

/// Halfedge from `a` to `b` (first found in CCW order), or -1.
int find_halfedge(const MeshEditor& mesh, int a, int b);

}  // namespace alexandrov
