#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "slc/slabel.hpp"

namespace slc {

/// Outcome of a randomized invariant check over small instances, each
/// judged against brute-force enumeration.
struct PropertyReport {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const noexcept { return failures == 0; }
};

/// A random labelled graph with 1..max_vertices vertices: each pair is an
/// edge with probability 1/2, orientation uniform, label uniform from
/// `labels` (all of size k).
SLabeledGraph random_instance(std::mt19937_64& rng, int max_vertices, int k,
                              std::span<const Permutation> labels);

/// Reversing an arc (and inverting its label) keeps the colouring set.
PropertyReport check_reversal(std::size_t trials, std::uint64_t seed);
/// relabel_colours(L, pi) has exactly the colourings pi o f.
PropertyReport check_relabel_bijection(std::size_t trials, std::uint64_t seed);
/// Conjugated label sets: cardinality, inverse round trip, and
/// colourability preserved by relabelling.
PropertyReport check_conjugation(std::size_t trials, std::uint64_t seed);
/// labels_within is monotone under set inclusion.
PropertyReport check_monotonicity(std::size_t trials, std::uint64_t seed);

std::vector<std::string> property_suite_names();

/// "conjugation", "reversal", "relabel" or "monotonicity".
PropertyReport run_property_suite(const std::string& name, std::size_t trials, std::uint64_t seed);

}  // namespace slc
