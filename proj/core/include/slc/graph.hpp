#pragma once

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace slc {

using Edge = std::pair<int, int>;

/// A simple undirected graph on vertices 0..n-1. Edges are stored as
/// (smaller, larger) pairs in sorted order; the position of an edge in
/// `edges()` is its edge index.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(int num_vertices, std::vector<Edge> edges);

  static SimpleGraph complete(int n);
  static SimpleGraph cycle(int n);

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& neighbours(int v) const { return adjacency_.at(v); }
  bool has_edge(int u, int v) const;
  std::optional<int> edge_index(int u, int v) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// A directed edge of an embedded graph.
struct Dart {
  int tail = 0;
  int head = 0;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

/// Faces are named by the lexicographically least dart on their boundary
/// walk, so a face keeps its id until an operation subdivides it.
using FaceId = Dart;

struct FaceWalk {
  FaceId id;
  /// Boundary in walk order starting at id.tail; dart i runs from
  /// vertices[i] to vertices[(i + 1) % size].
  std::vector<int> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
};

/// A connected simple plane graph given as a rotation system: for every
/// vertex, the cyclic order of its neighbours. Face tracing follows
/// (u -> v) by (v -> w), where w is the neighbour after u in v's rotation.
///
/// Values are immutable; every modifying operation returns a new graph.
class PlaneGraph {
 public:
  /// Validates symmetry of the rotation, simplicity, connectivity and
  /// Euler's formula V - E + F = 2.
  PlaneGraph(std::vector<std::vector<int>> rotation, Dart outer);

  static PlaneGraph triangle();
  static PlaneGraph cycle(int n);

  int num_vertices() const noexcept { return static_cast<int>(rotation_.size()); }
  int num_edges() const noexcept { return num_edges_; }
  int num_faces() const { return static_cast<int>(faces().size()); }
  const std::vector<int>& rotation(int v) const { return rotation_.at(v); }
  const std::vector<std::vector<int>>& rotations() const noexcept { return rotation_; }
  bool has_edge(int u, int v) const;

  Dart next_dart(Dart d) const;

  /// All faces, sorted by id. Every dart lies on exactly one walk.
  std::vector<FaceWalk> faces() const;
  FaceWalk face_containing(Dart d) const;
  /// Throws if `id` is not the least dart of its face.
  FaceWalk face(FaceId id) const;

  Dart outer_dart() const noexcept { return outer_; }
  FaceId outer_face() const { return face_containing(outer_).id; }

  bool is_triangulation() const;
  SimpleGraph to_simple_graph() const;

  /// Adds a vertex inside a triangular face joined to its three corners.
  /// Returns the new graph and the new vertex id (== old num_vertices()).
  std::pair<PlaneGraph, int> stack_vertex(FaceId face) const;

  /// Adds a vertex inside the face containing `in_face`, joined to the given
  /// corners of that face. The face boundary must be a simple cycle.
  std::pair<PlaneGraph, int> insert_vertex(Dart in_face, std::span<const int> corners) const;

  friend bool operator==(const PlaneGraph&, const PlaneGraph&) = default;

 private:
  std::vector<std::vector<int>> rotation_;
  Dart outer_;
  int num_edges_ = 0;
};

}  // namespace slc
