#include "slc/certify.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "slc/error.hpp"
#include "slc/formats.hpp"
#include "slc/solver.hpp"

namespace slc {

namespace {

constexpr std::size_t kMaxFrameColourings = 1'000'000;

std::string face_str(FaceId f) {
  return "(" + std::to_string(f.tail) + "," + std::to_string(f.head) + ")";
}

// Colours x for gadget vertex g that no arc between g and a frame vertex
// (id < frame) rules out, given the frame colouring f.
std::vector<int> frame_domain(const SLabeledGraph& graph, int frame, const Colouring& f, int g) {
  std::vector<int> out;
  for (int x = 1; x <= graph.k(); ++x) {
    bool allowed = true;
    for (const auto& arc : graph.arcs()) {
      if (arc.tail == g && arc.head < frame) {
        allowed = arc.label(x) != f[arc.head];
      } else if (arc.head == g && arc.tail < frame) {
        allowed = arc.label(f[arc.tail]) != x;
      }
      if (!allowed) break;
    }
    if (allowed) out.push_back(x);
  }
  return out;
}

// Depth-first enumeration in vertex order; each vertex is checked against
// the arcs to already coloured vertices. Kept separate from the solver.
class FrameEnumerator {
 public:
  FrameEnumerator(const SLabeledGraph& graph, int frame)
      : graph_(graph), frame_(frame), earlier_(frame), colours_(frame, 0) {
    for (std::size_t i = 0; i < graph.arcs().size(); ++i) {
      const auto& a = graph.arcs()[i];
      if (a.tail >= frame || a.head >= frame) continue;
      earlier_[std::max(a.tail, a.head)].push_back(static_cast<int>(i));
    }
  }

  // False if more than `cap` colourings exist.
  bool run(std::size_t cap) {
    cap_ = cap;
    return extend(0);
  }

  std::vector<Colouring> found;

 private:
  bool extend(int v) {
    if (v == frame_) {
      if (found.size() >= cap_) return false;
      found.push_back(Colouring{colours_});
      return true;
    }
    for (int c = 1; c <= graph_.k(); ++c) {
      colours_[v] = c;
      bool ok = true;
      for (int idx : earlier_[v]) {
        const auto& a = graph_.arcs()[idx];
        if (a.label(colours_[a.tail]) == colours_[a.head]) {
          ok = false;
          break;
        }
      }
      if (ok && !extend(v + 1)) return false;
    }
    colours_[v] = 0;
    return true;
  }

  const SLabeledGraph& graph_;
  int frame_;
  std::vector<std::vector<int>> earlier_;
  std::vector<int> colours_;
  std::size_t cap_ = 0;
};

CheckResult fail(std::string reason) { return CheckResult{false, std::move(reason)}; }

}  // namespace

Certificate make_certificate(const SLabeledGraph& graph,
                             const std::optional<Provenance>& provenance) {
  if (!provenance) {
    throw Error(Errc::cannot_certify, "instance carries no construction provenance");
  }
  const Provenance& prov = *provenance;
  const int frame = prov.frame_vertices;
  if (frame < 1 || frame > graph.num_vertices() || prov.faces.size() != prov.gadgets.size()) {
    throw Error(Errc::cannot_certify, "provenance does not match the instance");
  }

  Certificate cert;
  cert.digest = instance_digest(graph);
  cert.frame_vertices = frame;

  const auto found = enumerate_colourings(graph.prefix_subgraph(frame), kMaxFrameColourings);
  if (found.truncated) throw Error(Errc::cannot_certify, "frame has too many colourings");

  for (const auto& f : found.colourings) {
    auto it = std::find_if(prov.faces.begin(), prov.faces.end(),
                           [&](const DesignatedFace& d) { return d.colouring == f; });
    if (it == prov.faces.end()) {
      throw Error(Errc::cannot_certify, "a frame colouring has no designated face");
    }
    const auto& gadget = prov.gadgets[static_cast<std::size_t>(it - prov.faces.begin())];
    cert.base_colourings.push_back(BaseColouring{it->face, f});

    FaceRefutation face{it->face, gadget.a, gadget.b, gadget.c, {}, {}};
    const std::array<int, 3> trio{gadget.a, gadget.b, gadget.c};
    for (int i = 0; i < 3; ++i) face.domains[i] = frame_domain(graph, frame, f, trio[i]);

    std::vector<int> inner;  // arcs within the gadget triangle, ascending
    for (int i = 0; i < graph.num_arcs(); ++i) {
      const auto& a = graph.arc(i);
      const bool tail_in = std::find(trio.begin(), trio.end(), a.tail) != trio.end();
      const bool head_in = std::find(trio.begin(), trio.end(), a.head) != trio.end();
      if (tail_in && head_in) inner.push_back(i);
    }

    Colouring trial = f;
    trial.colours.resize(graph.num_vertices(), 0);
    for (int ca : face.domains[0]) {
      for (int cb : face.domains[1]) {
        for (int cc : face.domains[2]) {
          trial.colours[gadget.a] = ca;
          trial.colours[gadget.b] = cb;
          trial.colours[gadget.c] = cc;
          bool refuted = false;
          for (int idx : inner) {
            const auto& a = graph.arc(idx);
            const int lhs = a.label(trial[a.tail]);
            const int rhs = trial[a.head];
            if (lhs == rhs) {
              face.rows.push_back(RefutationRow{ca, cb, cc, idx, lhs, rhs});
              refuted = true;
              break;
            }
          }
          if (!refuted) {
            throw Error(Errc::cannot_certify, "gadget in face " + face_str(it->face) +
                                                  " admits a colouring (" + std::to_string(ca) +
                                                  "," + std::to_string(cb) + "," +
                                                  std::to_string(cc) + ")");
          }
        }
      }
    }
    cert.faces.push_back(std::move(face));
  }
  std::sort(cert.faces.begin(), cert.faces.end(),
            [](const FaceRefutation& x, const FaceRefutation& y) { return x.face < y.face; });
  return cert;
}

CheckResult verify_certificate(const Certificate& cert, const SLabeledGraph& graph) {
  if (cert.digest != instance_digest(graph)) return fail("digest does not match the instance");
  const int n = graph.num_vertices();
  const int frame = cert.frame_vertices;
  if (frame < 1 || frame > n) return fail("frame size out of range");

  // (a) The listed colourings are exactly the frame's proper colourings.
  FrameEnumerator enumerator(graph, frame);
  if (!enumerator.run(kMaxFrameColourings)) return fail("frame has too many colourings to check");
  std::vector<Colouring> listed;
  for (const auto& entry : cert.base_colourings) listed.push_back(entry.colouring);
  std::sort(listed.begin(), listed.end());
  if (std::adjacent_find(listed.begin(), listed.end()) != listed.end()) {
    return fail("a frame colouring is listed twice");
  }
  if (listed != enumerator.found) {
    return fail("listed frame colourings differ from the enumerated ones (" +
                std::to_string(listed.size()) + " listed, " +
                std::to_string(enumerator.found.size()) + " found)");
  }

  std::set<FaceId> seen_faces;
  for (const auto& face : cert.faces) {
    if (!seen_faces.insert(face.face).second) {
      return fail("face " + face_str(face.face) + " appears twice");
    }
  }

  for (const auto& entry : cert.base_colourings) {
    const auto it = std::find_if(cert.faces.begin(), cert.faces.end(),
                                 [&](const FaceRefutation& f) { return f.face == entry.face; });
    if (it == cert.faces.end()) {
      return fail("no refutation for face " + face_str(entry.face));
    }
    const FaceRefutation& face = *it;
    const std::string where = "face " + face_str(face.face);
    const std::array<int, 3> trio{face.a, face.b, face.c};
    for (int g : trio) {
      if (g < frame || g >= n) return fail(where + ": gadget vertex outside the instance tail");
    }
    if (face.a == face.b || face.b == face.c || face.a == face.c) {
      return fail(where + ": gadget vertices not distinct");
    }

    // (b) Domains follow from the arcs into the frame.
    for (int i = 0; i < 3; ++i) {
      if (frame_domain(graph, frame, entry.colouring, trio[i]) != face.domains[i]) {
        return fail(where + ": domain of gadget vertex " + std::to_string(trio[i]) +
                    " does not follow from its frame arcs");
      }
    }

    // (c) Rows cover the product exactly and each names a real violation.
    std::set<std::array<int, 3>> expected;
    for (int ca : face.domains[0]) {
      for (int cb : face.domains[1]) {
        for (int cc : face.domains[2]) expected.insert({ca, cb, cc});
      }
    }
    std::set<std::array<int, 3>> covered;
    for (std::size_t r = 0; r < face.rows.size(); ++r) {
      const auto& row = face.rows[r];
      const std::string row_where = where + " row " + std::to_string(r);
      if (!covered.insert({row.a, row.b, row.c}).second) return fail(row_where + ": duplicate");
      if (!expected.contains({row.a, row.b, row.c})) {
        return fail(row_where + ": combination outside the domains");
      }
      if (row.violated_arc < 0 || row.violated_arc >= graph.num_arcs()) {
        return fail(row_where + ": unknown arc " + std::to_string(row.violated_arc));
      }
      const auto& arc = graph.arc(row.violated_arc);
      auto colour_of = [&](int v) {
        if (v == face.a) return row.a;
        if (v == face.b) return row.b;
        if (v == face.c) return row.c;
        return 0;
      };
      const int tail_colour = colour_of(arc.tail);
      const int head_colour = colour_of(arc.head);
      if (tail_colour == 0 || head_colour == 0) {
        return fail(row_where + ": arc " + std::to_string(row.violated_arc) +
                    " is not inside the gadget");
      }
      const int lhs = arc.label(tail_colour);
      if (lhs != row.lhs || head_colour != row.rhs || lhs != head_colour) {
        return fail(row_where + ": arc " + std::to_string(row.violated_arc) + " is not violated");
      }
    }
    if (covered.size() != expected.size()) return fail(where + ": rows do not cover all combinations");
  }
  return CheckResult{true, {}};
}

}  // namespace slc
