#include "slc/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <set>
#include <stdexcept>
#include <string>

#include "slc/error.hpp"

namespace slc {

const char* to_string(Status s) noexcept { return s == Status::sat ? "SAT" : "UNSAT"; }

namespace {

using Mask = std::uint64_t;
using Partial = std::vector<std::pair<int, int>>;  // (vertex, colour)

constexpr Mask bit(int colour) { return Mask{1} << (colour - 1); }

// Neighbour of a vertex together with the colour it may not take, per colour
// of the vertex: forbid[c - 1].
struct Link {
  int other;
  std::vector<int> forbid;
};

class Search {
 public:
  Search(const SLabeledGraph& graph, const SolverOptions& options, bool symmetry)
      : n_(graph.num_vertices()), k_(graph.k()), options_(options), symmetry_(symmetry),
        links_(n_), assigned_(n_, 0), mark_(n_, 0) {
    if (k_ > kMaxSolverColours) {
      throw Error(Errc::resource_limit, "solver supports at most " +
                                            std::to_string(kMaxSolverColours) + " colours");
    }
    for (const auto& a : graph.arcs()) {
      // Arc (x, y): f(y) != label(f(x)) and, read backwards, f(x) != label^-1(f(y)).
      const auto inv = a.label.inverse();
      links_[a.tail].push_back(Link{a.head, a.label.images()});
      links_[a.head].push_back(Link{a.tail, inv.images()});
    }
  }

  std::vector<Mask> initial_domains() const {
    const Mask full = k_ == 64 ? ~Mask{0} : (Mask{1} << k_) - 1;
    return std::vector<Mask>(n_, full);
  }

  std::vector<int> all_vertices() const {
    std::vector<int> v(n_);
    for (int i = 0; i < n_; ++i) v[i] = i;
    return v;
  }

  // At most `cap` complete assignments of `vars`.
  std::vector<Partial> enumerate(const std::vector<int>& vars, const std::vector<Mask>& dom,
                                 std::size_t cap, int max_used) {
    if (vars.empty()) return {Partial{}};
    if (options_.decompose) {
      auto parts = components(vars);
      if (parts.size() > 1) {
        ++stats.splits;
        std::vector<std::vector<Partial>> solutions;
        for (const auto& part : parts) {
          auto s = enumerate(part, dom, cap, max_used);
          if (s.empty()) return {};
          solutions.push_back(std::move(s));
        }
        return product(solutions, cap);
      }
    }

    const int v = pick(vars, dom);
    if (std::popcount(dom[v]) > 1) ++stats.choice_points;
    std::vector<int> rest;
    rest.reserve(vars.size() - 1);
    for (int w : vars) {
      if (w != v) rest.push_back(w);
    }

    std::vector<Partial> out;
    assigned_[v] = 1;
    for (int c = 1; c <= k_ && out.size() < cap; ++c) {
      if (!(dom[v] & bit(c))) continue;
      if (symmetry_ && c > max_used + 1) break;
      ++stats.nodes;
      auto next = dom;
      next[v] = bit(c);
      if (!propagate(v, c, next)) continue;
      auto sub = enumerate(rest, next, cap - out.size(), std::max(max_used, c));
      for (auto& s : sub) {
        s.emplace_back(v, c);
        out.push_back(std::move(s));
      }
    }
    assigned_[v] = 0;
    return out;
  }

  std::uint64_t count(const std::vector<int>& vars, const std::vector<Mask>& dom) {
    if (vars.empty()) return 1;
    if (options_.decompose) {
      auto parts = components(vars);
      if (parts.size() > 1) {
        ++stats.splits;
        std::uint64_t total = 1;
        for (const auto& part : parts) {
          const std::uint64_t c = count(part, dom);
          if (c == 0) return 0;
          if (__builtin_mul_overflow(total, c, &total)) {
            throw Error(Errc::resource_limit, "colouring count overflows 64 bits");
          }
        }
        return total;
      }
    }
    const int v = pick(vars, dom);
    if (std::popcount(dom[v]) > 1) ++stats.choice_points;
    std::vector<int> rest;
    rest.reserve(vars.size() - 1);
    for (int w : vars) {
      if (w != v) rest.push_back(w);
    }
    std::uint64_t total = 0;
    assigned_[v] = 1;
    for (int c = 1; c <= k_; ++c) {
      if (!(dom[v] & bit(c))) continue;
      ++stats.nodes;
      auto next = dom;
      next[v] = bit(c);
      if (!propagate(v, c, next)) continue;
      if (__builtin_add_overflow(total, count(rest, next), &total)) {
        throw Error(Errc::resource_limit, "colouring count overflows 64 bits");
      }
    }
    assigned_[v] = 0;
    return total;
  }

  SolveStats stats;

 private:
  // Smallest candidate set first, then smallest id.
  int pick(const std::vector<int>& vars, const std::vector<Mask>& dom) const {
    int best = vars.front();
    int best_size = std::popcount(dom[best]);
    for (int v : vars) {
      const int size = std::popcount(dom[v]);
      if (size < best_size || (size == best_size && v < best)) {
        best = v;
        best_size = size;
      }
    }
    return best;
  }

  bool propagate(int v, int c, std::vector<Mask>& dom) {
    for (const auto& link : links_[v]) {
      if (assigned_[link.other]) continue;
      const Mask f = bit(link.forbid[c - 1]);
      if (dom[link.other] & f) {
        dom[link.other] &= ~f;
        ++stats.propagations;
        if (dom[link.other] == 0) return false;
      }
    }
    return true;
  }

  // Connected components of the unassigned vertices `vars`, each sorted.
  std::vector<std::vector<int>> components(const std::vector<int>& vars) {
    ++stamp_;
    for (int v : vars) mark_[v] = stamp_;
    std::vector<std::vector<int>> out;
    const int visited = -stamp_;
    for (int start : vars) {
      if (mark_[start] != stamp_) continue;
      std::vector<int> comp{start};
      mark_[start] = visited;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        for (const auto& link : links_[comp[i]]) {
          if (mark_[link.other] == stamp_) {
            mark_[link.other] = visited;
            comp.push_back(link.other);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  static std::vector<Partial> product(const std::vector<std::vector<Partial>>& parts,
                                      std::size_t cap) {
    std::vector<Partial> out{Partial{}};
    for (const auto& part : parts) {
      std::vector<Partial> next;
      for (const auto& prefix : out) {
        for (const auto& s : part) {
          if (next.size() >= cap) break;
          Partial joined = prefix;
          joined.insert(joined.end(), s.begin(), s.end());
          next.push_back(std::move(joined));
        }
        if (next.size() >= cap) break;
      }
      out = std::move(next);
    }
    return out;
  }

  int n_;
  int k_;
  SolverOptions options_;
  bool symmetry_;
  std::vector<std::vector<Link>> links_;
  std::vector<char> assigned_;
  std::vector<int> mark_;
  int stamp_ = 0;
};

Colouring to_colouring(const Partial& partial, int n) {
  Colouring f;
  f.colours.assign(n, 0);
  for (const auto& [v, c] : partial) f.colours[v] = c;
  return f;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

SolveResult solve(const SLabeledGraph& graph, const SolverOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const bool symmetry = options.break_colour_symmetry && graph.all_identity_labels();
  Search search(graph, options, symmetry);
  auto found = search.enumerate(search.all_vertices(), search.initial_domains(), 1, 0);

  SolveResult result;
  if (!found.empty()) {
    Colouring witness = to_colouring(found.front(), graph.num_vertices());
    if (!check_colouring(graph, witness)) {
      throw std::logic_error("solver produced a colouring that violates an arc");
    }
    result.status = Status::sat;
    result.witness = std::move(witness);
  }
  result.stats = search.stats;
  result.stats.wall_ms = elapsed_ms(start);
  return result;
}

Enumeration enumerate_colourings(const SLabeledGraph& graph, std::size_t limit,
                                 const SolverOptions& options) {
  if (limit < 1) throw Error(Errc::domain, "enumeration limit must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  Search search(graph, options, false);
  auto found = search.enumerate(search.all_vertices(), search.initial_domains(), limit + 1, 0);

  Enumeration out;
  out.truncated = found.size() > limit;
  if (out.truncated) found.resize(limit);
  out.colourings.reserve(found.size());
  for (const auto& p : found) {
    Colouring f = to_colouring(p, graph.num_vertices());
    if (!check_colouring(graph, f)) {
      throw std::logic_error("solver produced a colouring that violates an arc");
    }
    out.colourings.push_back(std::move(f));
  }
  std::sort(out.colourings.begin(), out.colourings.end());
  out.stats = search.stats;
  out.stats.wall_ms = elapsed_ms(start);
  return out;
}

CountResult count_colourings(const SLabeledGraph& graph, const SolverOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Search search(graph, options, false);
  CountResult out;
  out.count = search.count(search.all_vertices(), search.initial_domains());
  out.stats = search.stats;
  out.stats.wall_ms = elapsed_ms(start);
  return out;
}

std::vector<Colouring> brute_force_colourings(const SLabeledGraph& graph) {
  const int n = graph.num_vertices();
  const int k = graph.k();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(k);
    if (total > kBruteForceLimit) {
      throw Error(Errc::resource_limit, "k^|V| exceeds the brute-force limit of " +
                                            std::to_string(kBruteForceLimit));
    }
  }
  std::vector<Colouring> out;
  Colouring f;
  f.colours.assign(n, 1);
  while (true) {
    bool proper = true;
    for (const auto& a : graph.arcs()) {
      if (a.label(f.colours[a.tail]) == f.colours[a.head]) {
        proper = false;
        break;
      }
    }
    if (proper) out.push_back(f);
    int i = n - 1;
    while (i >= 0 && f.colours[i] == k) f.colours[i--] = 1;
    if (i < 0) break;
    ++f.colours[i];
  }
  return out;
}

PartitionSignature partition_signature(const Colouring& f) {
  PartitionSignature sig;
  std::vector<std::pair<int, int>> renaming;  // colour -> class
  for (int c : f.colours) {
    auto it = std::find_if(renaming.begin(), renaming.end(),
                           [c](const auto& p) { return p.first == c; });
    if (it == renaming.end()) {
      renaming.emplace_back(c, static_cast<int>(renaming.size()));
      sig.classes.push_back(renaming.back().second);
    } else {
      sig.classes.push_back(it->second);
    }
  }
  return sig;
}

bool is_uniquely_k_colourable(const SimpleGraph& graph, int k) {
  // One partition yields at most k! colourings, so more than k! proper
  // colourings already rules out uniqueness.
  std::uint64_t bound = 1;
  for (int i = 2; i <= k; ++i) {
    bound *= static_cast<std::uint64_t>(i);
    if (bound > 1'000'000) {
      throw Error(Errc::resource_limit, "k! is too large to enumerate colourings for k = " +
                                            std::to_string(k));
    }
  }
  const auto labelled = SLabeledGraph::all_identity(graph, k);
  const auto found = enumerate_colourings(labelled, static_cast<std::size_t>(bound));
  if (found.truncated || found.colourings.empty()) return false;
  std::set<PartitionSignature> signatures;
  for (const auto& f : found.colourings) signatures.insert(partition_signature(f));
  return signatures.size() == 1;
}

}  // namespace slc
