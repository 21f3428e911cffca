#include "slc/properties.hpp"

#include <algorithm>

#include "slc/error.hpp"
#include "slc/solver.hpp"

namespace slc {

namespace {

std::vector<Permutation> all_of(int k) {
  const auto set = symmetric_group(k);
  return set.members();
}

PermSet random_subset(std::mt19937_64& rng, const std::vector<Permutation>& pool, int k) {
  std::bernoulli_distribution coin(0.5);
  PermSet out(k);
  for (const auto& p : pool) {
    if (coin(rng)) out.insert(p);
  }
  if (out.empty()) out.insert(Permutation::identity(k));
  return out;
}

const Permutation& pick(std::mt19937_64& rng, std::span<const Permutation> pool) {
  std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
  return pool[d(rng)];
}

int random_k(std::mt19937_64& rng) { return std::uniform_int_distribution<int>(2, 3)(rng); }

void record(PropertyReport& report, bool ok, const std::string& what) {
  ++report.trials;
  if (!ok) {
    if (report.failures == 0) report.first_failure = what;
    ++report.failures;
  }
}

}  // namespace

SLabeledGraph random_instance(std::mt19937_64& rng, int max_vertices, int k,
                              std::span<const Permutation> labels) {
  const int n = std::uniform_int_distribution<int>(1, max_vertices)(rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!coin(rng)) continue;
      const auto& label = pick(rng, labels);
      if (coin(rng)) {
        arcs.push_back(Arc{u, v, label});
      } else {
        arcs.push_back(Arc{v, u, label});
      }
    }
  }
  return SLabeledGraph(n, k, std::move(arcs));
}

PropertyReport check_reversal(std::size_t trials, std::uint64_t seed) {
  PropertyReport report{"reversal", 0, 0, {}};
  std::mt19937_64 rng(seed);
  while (report.trials < trials) {
    const int k = random_k(rng);
    const auto labels = all_of(k);
    const auto g = random_instance(rng, 4, k, labels);
    if (g.num_arcs() == 0) continue;
    const int idx = std::uniform_int_distribution<int>(0, g.num_arcs() - 1)(rng);
    const auto flipped = reverse_arc(g, idx);
    record(report,
           brute_force_colourings(g) == brute_force_colourings(flipped) &&
               reverse_arc(flipped, idx) == g,
           "arc " + std::to_string(idx) + " of a " + std::to_string(g.num_vertices()) +
               "-vertex instance");
  }
  return report;
}

PropertyReport check_relabel_bijection(std::size_t trials, std::uint64_t seed) {
  PropertyReport report{"relabel", 0, 0, {}};
  std::mt19937_64 rng(seed);
  while (report.trials < trials) {
    const int k = random_k(rng);
    const auto labels = all_of(k);
    const auto g = random_instance(rng, 4, k, labels);
    const auto& pi = pick(rng, labels);
    std::vector<Colouring> mapped;
    for (const auto& f : brute_force_colourings(g)) mapped.push_back(rename_colours(f, pi));
    std::sort(mapped.begin(), mapped.end());
    record(report, brute_force_colourings(relabel_colours(g, pi)) == mapped,
           "relabel by " + pi.to_cycles());
  }
  return report;
}

PropertyReport check_conjugation(std::size_t trials, std::uint64_t seed) {
  PropertyReport report{"conjugation", 0, 0, {}};
  std::mt19937_64 rng(seed);
  while (report.trials < trials) {
    const int k = std::uniform_int_distribution<int>(2, 4)(rng);
    const auto pool = all_of(k);
    const PermSet s = random_subset(rng, pool, k);
    const auto& pi = pick(rng, pool);
    const PermSet conj = conjugate_set(s, pi);
    const auto g = random_instance(rng, 4, k, s.members());
    const auto moved = relabel_colours(g, pi);
    const bool ok = conj.size() == s.size() && conjugate_set(conj, pi.inverse()) == s &&
                    conjugate_set(s, Permutation::identity(k)) == s && labels_within(moved, conj) &&
                    solve(g).status == solve(moved).status;
    record(report, ok, "set of size " + std::to_string(s.size()) + " conjugated by " + pi.to_cycles());
  }
  return report;
}

PropertyReport check_monotonicity(std::size_t trials, std::uint64_t seed) {
  PropertyReport report{"monotonicity", 0, 0, {}};
  std::mt19937_64 rng(seed);
  while (report.trials < trials) {
    const int k = std::uniform_int_distribution<int>(2, 4)(rng);
    const auto pool = all_of(k);
    const PermSet small = random_subset(rng, pool, k);
    PermSet large = small;
    for (const auto& p : random_subset(rng, pool, k)) large.insert(p);
    const auto g = random_instance(rng, 4, k, small.members());
    const bool ok = small.is_subset_of(large) && labels_within(g, small) && labels_within(g, large);
    record(report, ok, "sets of size " + std::to_string(small.size()) + " and " +
                           std::to_string(large.size()));
  }
  return report;
}

std::vector<std::string> property_suite_names() {
  return {"conjugation", "reversal", "relabel", "monotonicity"};
}

PropertyReport run_property_suite(const std::string& name, std::size_t trials, std::uint64_t seed) {
  if (name == "conjugation") return check_conjugation(trials, seed);
  if (name == "reversal") return check_reversal(trials, seed);
  if (name == "relabel") return check_relabel_bijection(trials, seed);
  if (name == "monotonicity") return check_monotonicity(trials, seed);
  throw Error(Errc::domain, "unknown property suite '" + name + "'");
}

}  // namespace slc
