#include "slc/construct.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "slc/error.hpp"
#include "slc/solver.hpp"

namespace slc {

namespace {

constexpr int kColours = 4;

// Index i with {walk[i], walk[i+1]} == {x, y}.
Dart walk_dart_between(const FaceWalk& walk, int x, int y) {
  const auto& w = walk.vertices;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int s = w[i];
    const int t = w[(i + 1) % w.size()];
    if ((s == x && t == y) || (s == y && t == x)) return Dart{s, t};
  }
  throw Error(Errc::shape, "vertices " + std::to_string(x) + " and " + std::to_string(y) +
                               " are not consecutive on the face");
}

std::array<int, 3> corners_by_colour(const FaceWalk& walk, const Colouring& f) {
  std::array<int, 3> corners{-1, -1, -1};
  for (int v : walk.vertices) {
    const int c = f[v];
    if (c >= 1 && c <= 3) corners[c - 1] = v;
  }
  return corners;
}

}  // namespace

PlaneGraph base_triangulation() {
  PlaneGraph g = PlaneGraph::triangle();
  for (int i = 0; i < kBaseStackings; ++i) {
    const FaceId lowest = g.faces().front().id;
    g = g.stack_vertex(lowest).first;
  }
  return g;
}

Frame face_colouring_frame() {
  const PlaneGraph base = base_triangulation();
  const auto found =
      enumerate_colourings(SLabeledGraph::all_identity(base.to_simple_graph(), kColours), 24);
  const auto base_faces = base.faces();
  if (found.truncated || found.colourings.size() != base_faces.size()) {
    throw std::logic_error("base triangulation does not have one colouring per face");
  }

  std::vector<Colouring> colourings = found.colourings;
  PlaneGraph graph = base;
  std::vector<DesignatedFace> designated;
  designated.reserve(base_faces.size());

  for (std::size_t i = 0; i < base_faces.size(); ++i) {
    const FaceWalk& walk = base_faces[i];
    DesignatedFace entry{walk.id, walk.id, {}, {}, std::nullopt};
    std::set<int> seen;
    for (int v : walk.vertices) seen.insert(colourings[i][v]);

    if (seen != std::set<int>{1, 2, 3}) {
      const auto [next, z] = graph.stack_vertex(walk.id);
      graph = next;
      // z is forced to the colour missing from the face, in every colouring.
      for (auto& f : colourings) {
        int missing = 0;
        for (int c = 1; c <= kColours; ++c) {
          if (std::none_of(walk.vertices.begin(), walk.vertices.end(),
                           [&](int v) { return f[v] == c; })) {
            missing = c;
          }
        }
        f.colours.push_back(missing);
      }
      // Swapping the corner coloured 4 for z leaves a {1,2,3} sub-face; it
      // is the one on the dart between the other two corners.
      const auto& w = walk.vertices;
      const auto four = std::find_if(w.begin(), w.end(),
                                     [&](int v) { return colourings[i][v] == 4; });
      const std::size_t p = static_cast<std::size_t>(four - w.begin());
      const Dart opposite{w[(p + 1) % 3], w[(p + 2) % 3]};
      entry.face = graph.face_containing(opposite).id;
      entry.fixup = z;
    }
    designated.push_back(std::move(entry));
  }

  for (std::size_t i = 0; i < designated.size(); ++i) {
    auto& entry = designated[i];
    entry.colouring = colourings[i];
    entry.corners = corners_by_colour(graph.face(entry.face), entry.colouring);
  }
  return Frame{base, std::move(graph), FaceColouringMap{std::move(designated)}};
}

GadgetGraph insert_gadgets(const PlaneGraph& frame, const FaceColouringMap& map) {
  PlaneGraph g = frame;
  std::vector<GadgetRecord> gadgets;
  gadgets.reserve(map.faces.size());
  for (const auto& entry : map.faces) {
    const FaceWalk walk = g.face(entry.face);
    if (walk.length() != 3) {
      throw Error(Errc::shape, "designated face is not a triangle");
    }
    const auto [v1, v2, v3] = entry.corners;
    for (int v : entry.corners) {
      if (std::find(walk.vertices.begin(), walk.vertices.end(), v) == walk.vertices.end()) {
        throw Error(Errc::shape, "corner " + std::to_string(v) + " is not on its face");
      }
    }
    const Dart d12 = walk_dart_between(walk, v1, v2);
    const Dart d23 = walk_dart_between(walk, v2, v3);

    const std::array<int, 2> a_corners{v1, v2};
    auto [g1, a] = g.insert_vertex(d12, a_corners);
    const std::array<int, 3> b_corners{v1, v3, a};
    auto [g2, b] = g1.insert_vertex(d23, b_corners);
    const std::array<int, 4> c_corners{v2, v3, a, b};
    auto [g3, c] = g2.insert_vertex(d23, c_corners);
    g = std::move(g3);
    gadgets.push_back(GadgetRecord{entry.face, entry.corners, a, b, c});
  }
  return GadgetGraph{std::move(g), std::move(gadgets)};
}

const char* to_string(GadgetCase c) noexcept {
  return c == GadgetCase::three_cycle ? "c123" : "c1234";
}

GadgetCase gadget_case_from_string(const std::string& name) {
  if (name == "c123") return GadgetCase::three_cycle;
  if (name == "c1234") return GadgetCase::four_cycle;
  throw Error(Errc::domain, "unknown construction case '" + name + "' (expected c123 or c1234)");
}

Construction build_gadget_instance(GadgetCase gadget_case) {
  const Frame frame = face_colouring_frame();
  const GadgetGraph gadgets = insert_gadgets(frame.graph, frame.map);

  const Permutation id = Permutation::identity(kColours);
  const Permutation label = gadget_case == GadgetCase::three_cycle
                                ? Permutation{2, 3, 1, 4}   // (123)
                                : Permutation{2, 3, 4, 1};  // (1234)

  std::map<Edge, Arc> arcs;
  const SimpleGraph simple = gadgets.graph.to_simple_graph();
  for (const auto& [u, v] : simple.edges()) arcs.emplace(Edge{u, v}, Arc{u, v, id});
  auto set_arc = [&](int tail, int head) {
    auto it = arcs.find(Edge{std::min(tail, head), std::max(tail, head)});
    if (it == arcs.end()) throw std::logic_error("gadget arc is not an edge");
    it->second = Arc{tail, head, label};
  };
  for (const auto& r : gadgets.gadgets) {
    if (gadget_case == GadgetCase::three_cycle) {
      set_arc(r.b, r.a);
      set_arc(r.c, r.b);
      set_arc(r.a, r.c);
    } else {
      set_arc(r.c, r.a);
      set_arc(r.c, r.b);
      set_arc(r.corners[2], r.c);
      set_arc(r.corners[1], r.a);
    }
  }
  std::vector<Arc> list;
  list.reserve(arcs.size());
  for (auto& [edge, arc] : arcs) list.push_back(std::move(arc));

  Provenance prov{gadget_case,
                  label,
                  id,
                  frame.base.num_vertices(),
                  frame.graph.num_vertices(),
                  gadgets.graph,
                  frame.map.faces,
                  gadgets.gadgets};
  return Construction{SLabeledGraph(gadgets.graph.num_vertices(), kColours, std::move(list)),
                      std::move(prov)};
}

Construction build_c123() { return build_gadget_instance(GadgetCase::three_cycle); }
Construction build_c1234() { return build_gadget_instance(GadgetCase::four_cycle); }

Construction relabel(const Construction& construction, const Permutation& pi) {
  Construction out{relabel_colours(construction.instance, pi), construction.provenance};
  out.provenance.label = conjugate(construction.provenance.label, pi);
  out.provenance.relabelled_by = compose(pi, construction.provenance.relabelled_by);
  for (auto& entry : out.provenance.faces) entry.colouring = rename_colours(entry.colouring, pi);
  return out;
}

std::variant<Construction, Citation> bad_witness(const Permutation& p) {
  if (p.k() != kColours) {
    throw Error(Errc::invalid_size, "bad-set witnesses are defined for permutations of [4]");
  }
  if (p.is_identity()) {
    throw Error(Errc::no_witness, "{id} admits no uncolourable planar labelling");
  }
  const Permutation rep = conjugacy_class_rep(p);
  const auto type = rep.cycle_type();
  if (type == std::vector<int>{3, 1}) {
    return relabel(build_c123(), conjugating_permutation(rep, p));
  }
  if (type == std::vector<int>{4}) {
    return relabel(build_c1234(), conjugating_permutation(rep, p));
  }
  if (type == std::vector<int>{2, 1, 1}) {
    return Citation{rep,
                    "delegated to citation: a planar graph that is not signed Z_4-colourable "
                    "(labels {id, (12)}) is a published result; no construction is built here"};
  }
  return Citation{rep,
                  "delegated to citation: a planar graph that is not signed 4-colourable "
                  "(labels {id, (12)(34)}) is a published result; no construction is built here"};
}

}  // namespace slc
