#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "slc/graph.hpp"
#include "slc/slabel.hpp"

namespace slc {

enum class Status { sat, unsat };

const char* to_string(Status s) noexcept;

struct SolveStats {
  std::uint64_t nodes = 0;          // value assignments tried
  std::uint64_t propagations = 0;   // candidate colours removed from neighbours
  std::uint64_t choice_points = 0;  // branching vertices with more than one candidate
  std::uint64_t splits = 0;         // times the open vertices fell apart into components
  double wall_ms = 0.0;
};

struct SolveResult {
  Status status = Status::unsat;
  std::optional<Colouring> witness;
  SolveStats stats;
};

struct SolverOptions {
  /// Solve independent components of the unassigned vertices separately.
  bool decompose = true;
  /// Only try a colour if it is at most one above the largest colour used
  /// so far. Applied by solve() only, and only when every label is id;
  /// ignored otherwise since renaming colours conjugates the labels.
  bool break_colour_symmetry = false;
};

/// Largest k the search supports (candidate sets are 64-bit masks).
inline constexpr int kMaxSolverColours = 64;

/// Decides whether a proper k-colouring exists. SAT witnesses are checked
/// against the labelling before they are returned.
SolveResult solve(const SLabeledGraph& graph, const SolverOptions& options = {});

struct Enumeration {
  std::vector<Colouring> colourings;  // lexicographically sorted
  bool truncated = false;             // more colourings exist beyond `limit`
  SolveStats stats;
};

/// Up to `limit` proper colourings (limit >= 1).
Enumeration enumerate_colourings(const SLabeledGraph& graph, std::size_t limit,
                                 const SolverOptions& options = {});

struct CountResult {
  std::uint64_t count = 0;
  SolveStats stats;
};

/// Exact number of proper colourings; throws Errc::resource_limit on
/// 64-bit overflow.
CountResult count_colourings(const SLabeledGraph& graph, const SolverOptions& options = {});

inline constexpr std::uint64_t kBruteForceLimit = 10'000'000;

/// Every assignment in [k]^V that passes check_colouring, in lexicographic
/// order. Refuses instances with k^|V| > kBruteForceLimit.
std::vector<Colouring> brute_force_colourings(const SLabeledGraph& graph);

/// The colour-class partition of a colouring, with classes renamed by first
/// appearance in vertex order; colourings that differ by a renaming of
/// colours get equal signatures.
struct PartitionSignature {
  std::vector<int> classes;
  friend auto operator<=>(const PartitionSignature&, const PartitionSignature&) = default;
};

PartitionSignature partition_signature(const Colouring& f);

/// True iff the ordinary proper k-colourings of `graph` exist and all induce
/// the same partition of the vertex set.
bool is_uniquely_k_colourable(const SimpleGraph& graph, int k);

}  // namespace slc
