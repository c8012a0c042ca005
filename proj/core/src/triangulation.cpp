#include "alexandrov/triangulation.hpp"

#include "alexandrov/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

namespace alexandrov {

namespace {

std::string face_name(const Face& f) {
  return "(" + std::to_string(f[0]) + ", " + std::to_string(f[1]) + ", " + std::to_string(f[2]) + ")";
}

void check_indices(int vertex_count, const std::vector<Face>& faces) {
  if (vertex_count <= 0) throw Error(ErrorCode::InvalidInput, "vertex_count must be positive");
  if (faces.empty()) throw Error(ErrorCode::InvalidInput, "no triangles");
  for (const Face& f : faces) {
    for (int v : f) {
      if (v < 0 || v >= vertex_count) {
        throw Error(ErrorCode::InvalidInput, "vertex index out of range in triangle " + face_name(f));
      }
    }
  }
}

}  // namespace

Triangulation Triangulation::from_triangles(int vertex_count, std::vector<Face> faces) {
  check_indices(vertex_count, faces);
  std::map<std::pair<int, int>, int> directed;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const Face& t = faces[f];
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      throw Error(ErrorCode::NonManifold, "triangle " + face_name(t) + " repeats a vertex");
    }
    for (int k = 0; k < 3; ++k) {
      const auto key = std::make_pair(t[k], t[(k + 1) % 3]);
      if (!directed.emplace(key, static_cast<int>(3 * f + k)).second) {
        throw Error(ErrorCode::NonManifold, "directed edge " + std::to_string(key.first) + "->" +
                                                std::to_string(key.second) +
                                                " appears twice (inconsistent orientation or edge in >2 triangles)");
      }
    }
  }
  std::vector<int> twin(3 * faces.size(), -1);
  for (const auto& [key, h] : directed) {
    const auto it = directed.find({key.second, key.first});
    if (it == directed.end()) {
      throw Error(ErrorCode::NonManifold, "edge " + std::to_string(key.first) + "-" + std::to_string(key.second) +
                                              " is not shared by two consistently oriented triangles");
    }
    twin[h] = it->second;
  }
  Triangulation t;
  t.vertex_count_ = vertex_count;
  t.faces_ = std::move(faces);
  t.twin_ = std::move(twin);
  t.derive_and_validate();
  return t;
}

Triangulation Triangulation::from_gluing(int vertex_count, std::vector<Face> faces, std::vector<int> twin) {
  check_indices(vertex_count, faces);
  if (twin.size() != 3 * faces.size()) throw Error(ErrorCode::InvalidInput, "twin table size mismatch");
  Triangulation t;
  t.vertex_count_ = vertex_count;
  t.faces_ = std::move(faces);
  t.twin_ = std::move(twin);
  const int hcount = t.halfedge_count();
  for (int h = 0; h < hcount; ++h) {
    const int o = t.twin_[h];
    if (o < 0 || o >= hcount || o == h || t.twin_[o] != h) {
      throw Error(ErrorCode::NonManifold, "halfedge pairing is not an involution at " + std::to_string(h));
    }
    if (t.tail(o) != t.head(h) || t.head(o) != t.tail(h)) {
      throw Error(ErrorCode::NonManifold, "glued halfedges have inconsistent orientation at " + std::to_string(h));
    }
  }
  t.derive_and_validate();
  return t;
}

void Triangulation::derive_and_validate() {
  const int hcount = halfedge_count();
  edge_of_.assign(hcount, -1);
  edge_halfedge_.clear();
  for (int h = 0; h < hcount; ++h) {
    if (edge_of_[h] >= 0) continue;
    const int e = static_cast<int>(edge_halfedge_.size());
    edge_halfedge_.push_back(h);
    edge_of_[h] = e;
    edge_of_[twin_[h]] = e;
  }

  // Rotation orbits: each vertex must have exactly one (its link is a cycle).
  std::vector<int> first(vertex_count_, -1);
  std::vector<char> seen(hcount, 0);
  outgoing_offset_.assign(vertex_count_ + 1, 0);
  std::vector<std::vector<int>> orbit_of(vertex_count_);
  for (int h = 0; h < hcount; ++h) {
    if (seen[h]) continue;
    const int v = tail(h);
    if (first[v] >= 0) {
      throw Error(ErrorCode::NonManifold, "link of vertex " + std::to_string(v) + " is not a single cycle");
    }
    first[v] = h;
    int g = h;
    do {
      seen[g] = 1;
      orbit_of[v].push_back(g);
      g = rotate_ccw(g);
    } while (g != h);
  }
  for (int v = 0; v < vertex_count_; ++v) {
    if (first[v] < 0) throw Error(ErrorCode::NonManifold, "vertex " + std::to_string(v) + " is not used by any triangle");
  }
  outgoing_.clear();
  outgoing_.reserve(hcount);
  for (int v = 0; v < vertex_count_; ++v) {
    outgoing_offset_[v] = static_cast<int>(outgoing_.size());
    outgoing_.insert(outgoing_.end(), orbit_of[v].begin(), orbit_of[v].end());
  }
  outgoing_offset_[vertex_count_] = static_cast<int>(outgoing_.size());

  // Connectivity over faces.
  std::vector<char> reached(faces_.size(), 0);
  std::vector<int> stack{0};
  reached[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (int k = 0; k < 3; ++k) {
      const int g = face(twin_[3 * f + k]);
      if (!reached[g]) {
        reached[g] = 1;
        ++count;
        stack.push_back(g);
      }
    }
  }
  if (count != faces_.size()) throw Error(ErrorCode::NotSphere, "surface is disconnected");
  if (euler_characteristic() != 2) {
    throw Error(ErrorCode::NotSphere, "Euler characteristic V - E + F = " + std::to_string(euler_characteristic()) +
                                          " (expected 2)");
  }
}

std::span<const int> Triangulation::outgoing(int v) const {
  return std::span<const int>(outgoing_).subspan(outgoing_offset_[v], outgoing_offset_[v + 1] - outgoing_offset_[v]);
}

bool Triangulation::is_simplicial() const {
  std::set<std::pair<int, int>> pairs;
  for (int e = 0; e < edge_count(); ++e) {
    const int h = edge_halfedge_[e];
    int a = tail(h), b = head(h);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    if (!pairs.emplace(a, b).second) return false;
  }
  for (const Face& f : faces_) {
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) return false;
  }
  return true;
}

std::optional<int> Triangulation::find_halfedge(int i, int j) const {
  if (i < 0 || i >= vertex_count_) return std::nullopt;
  for (int h : outgoing(i)) {
    if (head(h) == j) return h;
  }
  return std::nullopt;
}

}  // namespace alexandrov
