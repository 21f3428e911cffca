#include "slc/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "slc/error.hpp"

namespace slc {

namespace {

std::string dart_str(Dart d) {
  return "(" + std::to_string(d.tail) + "," + std::to_string(d.head) + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// SimpleGraph

SimpleGraph::SimpleGraph(int num_vertices, std::vector<Edge> edges)
    : n_(num_vertices), edges_(std::move(edges)), adjacency_(num_vertices) {
  if (n_ < 0) throw Error(Errc::invalid_size, "negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw Error(Errc::domain, "edge endpoint outside [0," + std::to_string(n_) + ")");
    }
    if (u == v) throw Error(Errc::invariant, "loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error(Errc::invariant, "parallel edges are not allowed");
  }
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

SimpleGraph SimpleGraph::complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph SimpleGraph::cycle(int n) {
  if (n < 3) throw Error(Errc::invalid_size, "a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return SimpleGraph(n, std::move(edges));
}

bool SimpleGraph::has_edge(int u, int v) const { return edge_index(u, v).has_value(); }

std::optional<int> SimpleGraph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

// ---------------------------------------------------------------------------
// PlaneGraph

PlaneGraph::PlaneGraph(std::vector<std::vector<int>> rotation, Dart outer)
    : rotation_(std::move(rotation)), outer_(outer) {
  const int n = num_vertices();
  if (n < 2) throw Error(Errc::embedding, "a plane graph needs at least two vertices");

  int degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    const auto& rot = rotation_[v];
    std::set<int> seen;
    for (int w : rot) {
      if (w < 0 || w >= n) {
        throw Error(Errc::embedding, "rotation of " + std::to_string(v) + " names unknown vertex " +
                                         std::to_string(w));
      }
      if (w == v) throw Error(Errc::embedding, "loop at vertex " + std::to_string(v));
      if (!seen.insert(w).second) {
        throw Error(Errc::embedding, "rotation of " + std::to_string(v) + " repeats neighbour " +
                                         std::to_string(w));
      }
      const auto& back = rotation_[w];
      if (std::find(back.begin(), back.end(), v) == back.end()) {
        throw Error(Errc::embedding, "edge " + std::to_string(v) + "-" + std::to_string(w) +
                                         " missing from the rotation at " + std::to_string(w));
      }
    }
    degree_sum += static_cast<int>(rot.size());
  }
  num_edges_ = degree_sum / 2;

  std::vector<bool> reached(n, false);
  std::vector<int> stack{0};
  reached[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : rotation_[v]) {
      if (!reached[w]) {
        reached[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  if (count != n) throw Error(Errc::embedding, "plane graph is not connected");

  if (!has_edge(outer_.tail, outer_.head)) {
    throw Error(Errc::embedding, "outer dart " + dart_str(outer_) + " is not an edge");
  }
  const int f = num_faces();
  if (n - num_edges_ + f != 2) {
    throw Error(Errc::embedding, "rotation system is not planar: V - E + F = " +
                                     std::to_string(n - num_edges_ + f));
  }
}

PlaneGraph PlaneGraph::triangle() { return PlaneGraph({{1, 2}, {2, 0}, {0, 1}}, Dart{1, 0}); }

PlaneGraph PlaneGraph::cycle(int n) {
  if (n < 3) throw Error(Errc::invalid_size, "a cycle needs at least 3 vertices");
  std::vector<std::vector<int>> rot(n);
  for (int i = 0; i < n; ++i) rot[i] = {(i + 1) % n, (i + n - 1) % n};
  return PlaneGraph(std::move(rot), Dart{1, 0});
}

bool PlaneGraph::has_edge(int u, int v) const {
  if (u < 0 || u >= num_vertices()) return false;
  const auto& rot = rotation_[u];
  return std::find(rot.begin(), rot.end(), v) != rot.end();
}

Dart PlaneGraph::next_dart(Dart d) const {
  const auto& rot = rotation_.at(d.head);
  auto it = std::find(rot.begin(), rot.end(), d.tail);
  if (it == rot.end()) throw Error(Errc::embedding, "dart " + dart_str(d) + " is not an edge");
  ++it;
  if (it == rot.end()) it = rot.begin();
  return Dart{d.head, *it};
}

FaceWalk PlaneGraph::face_containing(Dart d) const {
  if (!has_edge(d.tail, d.head)) {
    throw Error(Errc::domain, "dart " + dart_str(d) + " is not an edge");
  }
  std::vector<Dart> walk;
  Dart cur = d;
  do {
    walk.push_back(cur);
    cur = next_dart(cur);
    if (walk.size() > static_cast<std::size_t>(2 * num_edges_)) {
      throw Error(Errc::embedding, "face walk from " + dart_str(d) + " does not close");
    }
  } while (cur != d);
  const auto least = std::min_element(walk.begin(), walk.end());
  std::rotate(walk.begin(), least, walk.end());
  FaceWalk out{walk.front(), {}};
  out.vertices.reserve(walk.size());
  for (const auto& dart : walk) out.vertices.push_back(dart.tail);
  return out;
}

FaceWalk PlaneGraph::face(FaceId id) const {
  FaceWalk walk = face_containing(id);
  if (walk.id != id) throw Error(Errc::domain, "no face has id " + dart_str(id));
  return walk;
}

std::vector<FaceWalk> PlaneGraph::faces() const {
  // Visiting darts in lexicographic order means the first unvisited dart of
  // each face is its least one.
  std::set<Dart> visited;
  std::vector<FaceWalk> out;
  for (int u = 0; u < num_vertices(); ++u) {
    std::vector<int> heads = rotation_[u];
    std::sort(heads.begin(), heads.end());
    for (int v : heads) {
      const Dart start{u, v};
      if (visited.contains(start)) continue;
      FaceWalk walk{start, {}};
      Dart cur = start;
      do {
        if (!visited.insert(cur).second) {
          throw Error(Errc::embedding, "dart " + dart_str(cur) + " lies on two face walks");
        }
        walk.vertices.push_back(cur.tail);
        cur = next_dart(cur);
      } while (cur != start);
      out.push_back(std::move(walk));
    }
  }
  return out;
}

bool PlaneGraph::is_triangulation() const {
  const auto all = faces();
  return std::all_of(all.begin(), all.end(), [](const FaceWalk& f) { return f.length() == 3; });
}

SimpleGraph PlaneGraph::to_simple_graph() const {
  std::vector<Edge> edges;
  edges.reserve(num_edges_);
  for (int u = 0; u < num_vertices(); ++u) {
    for (int v : rotation_[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return SimpleGraph(num_vertices(), std::move(edges));
}

std::pair<PlaneGraph, int> PlaneGraph::stack_vertex(FaceId id) const {
  const FaceWalk walk = face(id);
  if (walk.length() != 3) {
    throw Error(Errc::shape, "face " + dart_str(id) + " has length " +
                                 std::to_string(walk.length()) + ", not a triangle");
  }
  return insert_vertex(id, walk.vertices);
}

std::pair<PlaneGraph, int> PlaneGraph::insert_vertex(Dart in_face,
                                                     std::span<const int> corners) const {
  const FaceWalk walk = face_containing(in_face);
  const auto& w = walk.vertices;
  const std::size_t m = w.size();
  {
    std::vector<int> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(Errc::shape, "face " + dart_str(walk.id) + " is not bounded by a simple cycle");
    }
  }
  if (corners.empty()) throw Error(Errc::shape, "new vertex needs at least one corner");

  std::vector<std::size_t> positions;
  for (int c : corners) {
    auto it = std::find(w.begin(), w.end(), c);
    if (it == w.end()) {
      throw Error(Errc::shape, "vertex " + std::to_string(c) + " is not on face " +
                                   dart_str(walk.id));
    }
    positions.push_back(static_cast<std::size_t>(it - w.begin()));
  }
  std::sort(positions.begin(), positions.end());
  if (std::adjacent_find(positions.begin(), positions.end()) != positions.end()) {
    throw Error(Errc::shape, "corner listed twice");
  }

  const int x = num_vertices();
  auto rot = rotation_;
  for (std::size_t p : positions) {
    const int corner = w[p];
    const int prev = w[(p + m - 1) % m];
    auto& r = rot[corner];
    auto it = std::find(r.begin(), r.end(), prev);
    r.insert(it + 1, x);
  }
  // The new vertex sees the corners in the reverse of the walk order.
  std::vector<int> own;
  for (auto it = positions.rbegin(); it != positions.rend(); ++it) own.push_back(w[*it]);
  rot.push_back(std::move(own));
  return {PlaneGraph(std::move(rot), outer_), x};
}

}  // namespace slc
