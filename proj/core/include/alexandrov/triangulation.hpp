#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace alexandrov {

using Face = std::array<int, 3>;

/// Closed oriented triangulated sphere stored as a halfedge table.
///
/// Halfedge `3*f + k` runs from `faces[f][k]` to `faces[f][(k+1)%3]`; faces are
/// counter-clockwise seen from outside, so every halfedge has its face on the
/// left. Parallel edges and loops are allowed (intrinsic triangulations need
/// them); `is_simplicial()` reports whether the complex is a simplicial one.
class Triangulation {
 public:
  Triangulation() = default;

  /// Builds from vertex triples, pairing halfedges by their directed endpoints.
  /// Requires a simplicial complex: each directed pair appears exactly once.
  static Triangulation from_triangles(int vertex_count, std::vector<Face> faces);

  /// Builds from an explicit halfedge pairing, for gluings that create
  /// parallel edges.
  static Triangulation from_gluing(int vertex_count, std::vector<Face> faces, std::vector<int> twin);

  [[nodiscard]] int vertex_count() const noexcept { return vertex_count_; }
  [[nodiscard]] int face_count() const noexcept { return static_cast<int>(faces_.size()); }
  [[nodiscard]] int halfedge_count() const noexcept { return static_cast<int>(twin_.size()); }
  [[nodiscard]] int edge_count() const noexcept { return static_cast<int>(edge_halfedge_.size()); }

  [[nodiscard]] const std::vector<Face>& faces() const noexcept { return faces_; }
  [[nodiscard]] const std::vector<int>& twins() const noexcept { return twin_; }

  [[nodiscard]] static int next(int h) noexcept { return h - h % 3 + (h % 3 + 1) % 3; }
  [[nodiscard]] static int prev(int h) noexcept { return h - h % 3 + (h % 3 + 2) % 3; }
  [[nodiscard]] static int face(int h) noexcept { return h / 3; }

  [[nodiscard]] int twin(int h) const { return twin_[h]; }
  [[nodiscard]] int tail(int h) const { return faces_[h / 3][h % 3]; }
  [[nodiscard]] int head(int h) const { return faces_[h / 3][(h % 3 + 1) % 3]; }

  /// Edge id of a halfedge; edges are numbered by their smaller halfedge.
  [[nodiscard]] int edge(int h) const { return edge_of_[h]; }
  /// The smaller halfedge of an edge.
  [[nodiscard]] int edge_halfedge(int e) const { return edge_halfedge_[e]; }

  /// Outgoing halfedges of `v` in counter-clockwise order, starting from the
  /// smallest halfedge id.
  [[nodiscard]] std::span<const int> outgoing(int v) const;
  [[nodiscard]] int degree(int v) const { return static_cast<int>(outgoing(v).size()); }

  /// Next outgoing halfedge counter-clockwise around the tail.
  [[nodiscard]] int rotate_ccw(int h) const { return twin_[prev(h)]; }
  /// Next outgoing halfedge clockwise around the tail.
  [[nodiscard]] int rotate_cw(int h) const { return next(twin_[h]); }

  [[nodiscard]] bool is_simplicial() const;
  /// Halfedge from i to j when the complex is simplicial and the edge exists.
  [[nodiscard]] std::optional<int> find_halfedge(int i, int j) const;

  [[nodiscard]] int euler_characteristic() const {
    return vertex_count_ - edge_count() + face_count();
  }

 private:
  void derive_and_validate();

  int vertex_count_ = 0;
  std::vector<Face> faces_;
  std::vector<int> twin_;
  std::vector<int> edge_of_;
  std::vector<int> edge_halfedge_;
  std::vector<int> outgoing_offset_;
  std::vector<int> outgoing_;
};

}  // namespace alexandrov
