#pragma once

#include <compare>
#include <span>
#include <vector>

#include "slc/graph.hpp"
#include "slc/group.hpp"
#include "slc/perm.hpp"

namespace slc {

/// An oriented edge carrying a permutation label. A colouring f respects the
/// arc iff label(f(tail)) != f(head).
struct Arc {
  int tail = 0;
  int head = 0;
  Permutation label;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Vertex colours 1..k, indexed by vertex id.
struct Colouring {
  std::vector<int> colours;

  int operator[](int v) const { return colours.at(v); }
  std::size_t size() const noexcept { return colours.size(); }

  friend bool operator==(const Colouring&, const Colouring&) = default;
  friend auto operator<=>(const Colouring&, const Colouring&) = default;
};

/// A simple graph on vertices 0..n-1 with exactly one labelled arc per
/// edge, all labels over the same [k]. Arcs are kept sorted by their
/// undirected endpoint pair; an arc's position is its arc index.
class SLabeledGraph {
 public:
  SLabeledGraph(int num_vertices, int k, std::vector<Arc> arcs);

  /// Every edge of `graph` becomes an id-labelled arc from the smaller id.
  static SLabeledGraph all_identity(const SimpleGraph& graph, int k);

  int num_vertices() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const Arc& arc(int index) const { return arcs_.at(index); }
  int num_arcs() const noexcept { return static_cast<int>(arcs_.size()); }

  /// Index of the arc joining u and v (in either direction), or -1.
  int find_arc(int u, int v) const;
  SimpleGraph underlying() const;
  bool all_identity_labels() const;

  /// The labelled graph induced on vertices 0..count-1.
  SLabeledGraph prefix_subgraph(int count) const;

  friend bool operator==(const SLabeledGraph&, const SLabeledGraph&) = default;

 private:
  int n_;
  int k_;
  std::vector<Arc> arcs_;
};

/// True iff every arc e = (x, y) has label_e(f(x)) != f(y). Throws
/// Errc::domain when f is not a total colouring into [k].
bool check_colouring(const SLabeledGraph& graph, const Colouring& f);

/// Flips arc `index` and inverts its label; proper colourings are unchanged.
SLabeledGraph reverse_arc(const SLabeledGraph& graph, int index);

/// Replaces every label sigma by pi sigma pi^{-1}. f is proper for the input
/// iff pi o f is proper for the output.
SLabeledGraph relabel_colours(const SLabeledGraph& graph, const Permutation& pi);

/// pi o f.
Colouring rename_colours(const Colouring& f, const Permutation& pi);

bool labels_within(const SLabeledGraph& graph, const PermSet& set);

// --- adapters from other colouring frameworks -----------------------------

/// Signs are +1 / -1 per edge index of `graph`. Positive edges become id
/// arcs, negative ones arcs labelled negation_permutation(k, mode); all arcs
/// run from the smaller vertex id.
SLabeledGraph from_signed(const SimpleGraph& graph, std::span<const int> signs, int k,
                          SignedMode mode);

/// Colour of signed colour value `c` under the pairing +i -> 2i-1, -i -> 2i
/// and the fixed values (0, and k/2 in Z_k for even k) on the remaining
/// top points. For SignedMode::cyclic, `c` is taken mod k and must lie in
/// {0..k-1}; for SignedMode::natural, c ranges over N_k.
int signed_value_to_colour(int c, int k, SignedMode mode);

struct WeightedArc {
  int tail = 0;
  int head = 0;
  int weight = 0;
};

/// Group Z_k colouring (f(head) - f(tail) != weight mod k) as an S-labelling
/// with cyclic-shift labels; colour c in Z_k corresponds to c + 1.
SLabeledGraph from_group_zk(int num_vertices, std::span<const WeightedArc> arcs, int k);

struct GainArc {
  int tail = 0;
  int head = 0;
  int element = 0;
};

/// Gain-graph k-colouring as an S-labelling over [k*n + 1], each arc
/// labelled gain_encode(group, k, element).
SLabeledGraph from_gain(int num_vertices, std::span<const GainArc> arcs, const GroupTable& group,
                        int k);

}  // namespace slc
