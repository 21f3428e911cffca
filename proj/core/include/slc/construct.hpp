#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "slc/graph.hpp"
#include "slc/perm.hpp"
#include "slc/slabel.hpp"

namespace slc {

inline constexpr int kBaseStackings = 11;  // 2 + 2 * 11 = 24 faces

/// Stacked triangulation with 24 faces: start from a triangle and stack into
/// the lowest-id face eleven times. |V| = 14, |E| = 36; uniquely
/// 4-colourable, hence exactly 24 proper 4-colourings.
PlaneGraph base_triangulation();

/// One designated face of the frame triangulation and the 4-colouring it is
/// paired with.
struct DesignatedFace {
  FaceId face;                // face of the frame graph
  FaceId original_face;       // face of the base triangulation it came from
  Colouring colouring;        // proper 4-colouring of the frame graph
  std::array<int, 3> corners; // corners[i] has colour i + 1 under `colouring`
  std::optional<int> fixup;   // vertex stacked into original_face, if any

  friend bool operator==(const DesignatedFace&, const DesignatedFace&) = default;
};

/// The 24 designated faces, in the order of their (lexicographically sorted)
/// colourings. Every proper 4-colouring of the frame graph appears once.
struct FaceColouringMap {
  std::vector<DesignatedFace> faces;
  friend bool operator==(const FaceColouringMap&, const FaceColouringMap&) = default;
};

struct Frame {
  PlaneGraph base;   // before fix-up
  PlaneGraph graph;  // uniquely 4-colourable, after fix-up
  FaceColouringMap map;
};

/// Pairs the sorted colourings of base_triangulation() with its faces in
/// ascending id order. A face whose corners are not coloured {1,2,3} gets a
/// stacked vertex, and the sub-face coloured {1,2,3} is designated instead.
Frame face_colouring_frame();

/// Triangle a-b-c inside a designated face, a joined to corners 1 and 2,
/// b to corners 1 and 3, c to corners 2 and 3.
struct GadgetRecord {
  FaceId face;
  std::array<int, 3> corners;
  int a = 0;
  int b = 0;
  int c = 0;

  friend bool operator==(const GadgetRecord&, const GadgetRecord&) = default;
};

struct GadgetGraph {
  PlaneGraph graph;
  std::vector<GadgetRecord> gadgets;  // parallel to map.faces
};

/// Embeds one gadget per designated face. Each face becomes the octahedral
/// disk (v1,v2,a) (v2,c,a) (v2,v3,c) (v3,b,c) (v3,v1,b) (v1,a,b) (a,c,b).
GadgetGraph insert_gadgets(const PlaneGraph& frame, const FaceColouringMap& map);

enum class GadgetCase {
  three_cycle,  // labels {id, (123)}
  four_cycle,   // labels {id, (1234)}
};

const char* to_string(GadgetCase c) noexcept;
GadgetCase gadget_case_from_string(const std::string& name);  // "c123" / "c1234"

/// Everything needed to re-derive and certify a gadget instance.
struct Provenance {
  GadgetCase gadget_case = GadgetCase::three_cycle;
  Permutation label;          // the non-identity label used by the gadgets
  Permutation relabelled_by;  // colour renaming applied after building
  int base_vertices = 0;
  int frame_vertices = 0;     // vertices 0..frame_vertices-1 form the frame
  PlaneGraph embedding;
  /// Parallel lists. After relabelling, colourings are renamed but corner
  /// roles are those of the unrelabelled build.
  std::vector<DesignatedFace> faces;
  std::vector<GadgetRecord> gadgets;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Construction {
  SLabeledGraph instance;
  Provenance provenance;

  friend bool operator==(const Construction&, const Construction&) = default;
};

/// Gadget arcs (b,a), (c,b), (a,c) carry (123); all other arcs are id and
/// run from the smaller vertex id.
Construction build_c123();

/// Arcs (c,a), (c,b), (v3,c), (v2,a) of each gadget carry (1234); all
/// other arcs (a-b included) are id and run from the smaller vertex id.
Construction build_c1234();

Construction build_gadget_instance(GadgetCase gadget_case);

/// Conjugates every label by pi and renames the recorded colourings.
Construction relabel(const Construction& construction, const Permutation& pi);

/// A case for which no graph is built here; the non-colourable instance is
/// a published result.
struct Citation {
  Permutation representative;
  std::string reference;
};

/// For a non-identity p in S_4: an uncolourable instance with labels in
/// {id, p} when p is a 3- or 4-cycle, otherwise the citation covering p's
/// conjugacy class. Throws Errc::no_witness for p = id.
std::variant<Construction, Citation> bad_witness(const Permutation& p);

}  // namespace slc
