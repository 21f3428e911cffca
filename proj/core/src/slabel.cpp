#include "slc/slabel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "slc/error.hpp"

namespace slc {

namespace {

Edge key(const Arc& a) { return {std::min(a.tail, a.head), std::max(a.tail, a.head)}; }

}  // namespace

SLabeledGraph::SLabeledGraph(int num_vertices, int k, std::vector<Arc> arcs)
    : n_(num_vertices), k_(k), arcs_(std::move(arcs)) {
  if (n_ < 0) throw Error(Errc::invalid_size, "negative vertex count");
  if (k_ < 1) throw Error(Errc::invalid_size, "colour count must be positive");
  for (const auto& a : arcs_) {
    if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_) {
      throw Error(Errc::invariant, "arc (" + std::to_string(a.tail) + "," +
                                       std::to_string(a.head) + ") has an unknown endpoint");
    }
    if (a.tail == a.head) throw Error(Errc::invariant, "loop at vertex " + std::to_string(a.tail));
    if (a.label.k() != k_) {
      throw Error(Errc::invariant, "arc (" + std::to_string(a.tail) + "," +
                                       std::to_string(a.head) + ") label has size " +
                                       std::to_string(a.label.k()) + ", expected " +
                                       std::to_string(k_));
    }
  }
  std::stable_sort(arcs_.begin(), arcs_.end(),
                   [](const Arc& a, const Arc& b) { return key(a) < key(b); });
  for (std::size_t i = 1; i < arcs_.size(); ++i) {
    if (key(arcs_[i]) == key(arcs_[i - 1])) {
      const auto [u, v] = key(arcs_[i]);
      throw Error(Errc::invariant, "more than one arc on edge " + std::to_string(u) + "-" +
                                       std::to_string(v));
    }
  }
}

SLabeledGraph SLabeledGraph::all_identity(const SimpleGraph& graph, int k) {
  const auto id = Permutation::identity(k);
  std::vector<Arc> arcs;
  arcs.reserve(graph.num_edges());
  for (const auto& [u, v] : graph.edges()) arcs.push_back(Arc{u, v, id});
  return SLabeledGraph(graph.num_vertices(), k, std::move(arcs));
}

int SLabeledGraph::find_arc(int u, int v) const {
  const Edge target{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), target,
                             [](const Arc& a, const Edge& e) { return key(a) < e; });
  if (it == arcs_.end() || key(*it) != target) return -1;
  return static_cast<int>(it - arcs_.begin());
}

SimpleGraph SLabeledGraph::underlying() const {
  std::vector<Edge> edges;
  edges.reserve(arcs_.size());
  for (const auto& a : arcs_) edges.push_back(key(a));
  return SimpleGraph(n_, std::move(edges));
}

bool SLabeledGraph::all_identity_labels() const {
  return std::all_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.label.is_identity(); });
}

SLabeledGraph SLabeledGraph::prefix_subgraph(int count) const {
  if (count < 0 || count > n_) throw Error(Errc::domain, "prefix size out of range");
  std::vector<Arc> kept;
  for (const auto& a : arcs_) {
    if (a.tail < count && a.head < count) kept.push_back(a);
  }
  return SLabeledGraph(count, k_, std::move(kept));
}

bool check_colouring(const SLabeledGraph& graph, const Colouring& f) {
  if (static_cast<int>(f.size()) != graph.num_vertices()) {
    throw Error(Errc::domain, "colouring covers " + std::to_string(f.size()) + " of " +
                                  std::to_string(graph.num_vertices()) + " vertices");
  }
  for (int c : f.colours) {
    if (c < 1 || c > graph.k()) {
      throw Error(Errc::domain, "colour " + std::to_string(c) + " outside [1," +
                                    std::to_string(graph.k()) + "]");
    }
  }
  return std::none_of(graph.arcs().begin(), graph.arcs().end(), [&](const Arc& a) {
    return a.label(f[a.tail]) == f[a.head];
  });
}

SLabeledGraph reverse_arc(const SLabeledGraph& graph, int index) {
  if (index < 0 || index >= graph.num_arcs()) {
    throw Error(Errc::unknown_edge, "no arc with index " + std::to_string(index));
  }
  auto arcs = graph.arcs();
  auto& a = arcs[index];
  a = Arc{a.head, a.tail, a.label.inverse()};
  return SLabeledGraph(graph.num_vertices(), graph.k(), std::move(arcs));
}

SLabeledGraph relabel_colours(const SLabeledGraph& graph, const Permutation& pi) {
  if (pi.k() != graph.k()) {
    throw Error(Errc::size_mismatch, "relabelling permutation has size " +
                                         std::to_string(pi.k()) + ", graph has k = " +
                                         std::to_string(graph.k()));
  }
  auto arcs = graph.arcs();
  for (auto& a : arcs) a.label = conjugate(a.label, pi);
  return SLabeledGraph(graph.num_vertices(), graph.k(), std::move(arcs));
}

Colouring rename_colours(const Colouring& f, const Permutation& pi) {
  Colouring out;
  out.colours.reserve(f.size());
  for (int c : f.colours) out.colours.push_back(pi(c));
  return out;
}

bool labels_within(const SLabeledGraph& graph, const PermSet& set) {
  if (set.k() != graph.k()) {
    throw Error(Errc::size_mismatch, "label set is over [" + std::to_string(set.k()) +
                                         "], graph has k = " + std::to_string(graph.k()));
  }
  return std::all_of(graph.arcs().begin(), graph.arcs().end(),
                     [&](const Arc& a) { return set.contains(a.label); });
}

SLabeledGraph from_signed(const SimpleGraph& graph, std::span<const int> signs, int k,
                          SignedMode mode) {
  if (static_cast<int>(signs.size()) != graph.num_edges()) {
    throw Error(Errc::domain, "expected " + std::to_string(graph.num_edges()) + " signs, got " +
                                  std::to_string(signs.size()));
  }
  const auto id = Permutation::identity(k);
  const auto neg = negation_permutation(k, mode);
  std::vector<Arc> arcs;
  arcs.reserve(signs.size());
  for (int i = 0; i < graph.num_edges(); ++i) {
    if (signs[i] != 1 && signs[i] != -1) {
      throw Error(Errc::domain, "sign of edge " + std::to_string(i) + " must be +1 or -1");
    }
    const auto [u, v] = graph.edges()[i];
    arcs.push_back(Arc{u, v, signs[i] == 1 ? id : neg});
  }
  return SLabeledGraph(graph.num_vertices(), k, std::move(arcs));
}

int signed_value_to_colour(int c, int k, SignedMode mode) {
  if (k < 1) throw Error(Errc::invalid_size, "k must be positive");
  if (mode == SignedMode::natural) {
    const int q = k / 2;
    if (c == 0) {
      if (k % 2 == 0) throw Error(Errc::domain, "0 is not a colour of N_k for even k");
      return k;
    }
    if (std::abs(c) > q) throw Error(Errc::domain, "value " + std::to_string(c) + " not in N_k");
    return c > 0 ? 2 * c - 1 : 2 * (-c);
  }
  if (c < 0 || c >= k) throw Error(Errc::domain, "value " + std::to_string(c) + " not in Z_k");
  const int q = (k + 1) / 2 - 1;
  if (c == 0) return 2 * q + 1;
  if (c <= q) return 2 * c - 1;
  if (k - c <= q) return 2 * (k - c);
  return k;  // c == k/2 for even k
}

SLabeledGraph from_group_zk(int num_vertices, std::span<const WeightedArc> arcs, int k) {
  std::vector<Arc> out;
  out.reserve(arcs.size());
  for (const auto& a : arcs) {
    if (a.weight < 0 || a.weight >= k) {
      throw Error(Errc::domain, "weight " + std::to_string(a.weight) + " outside Z_" +
                                    std::to_string(k));
    }
    out.push_back(Arc{a.tail, a.head, cyclic_shift(k, a.weight)});
  }
  return SLabeledGraph(num_vertices, k, std::move(out));
}

SLabeledGraph from_gain(int num_vertices, std::span<const GainArc> arcs, const GroupTable& group,
                        int k) {
  const int degree = k * group.order() + 1;
  std::vector<Arc> out;
  out.reserve(arcs.size());
  for (const auto& a : arcs) out.push_back(Arc{a.tail, a.head, gain_encode(group, k, a.element)});
  if (out.empty()) {
    gain_encode(group, k, group.identity_index());  // size checks still apply
  }
  return SLabeledGraph(num_vertices, degree, std::move(out));
}

}  // namespace slc
