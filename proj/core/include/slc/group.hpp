#pragma once

#include <span>
#include <vector>

#include "slc/perm.hpp"

namespace slc {

/// A finite group given by its multiplication table over element indices
/// 0..n-1. Construction checks closure, associativity (exhaustively),
/// identity and inverses.
class GroupTable {
 public:
  explicit GroupTable(std::vector<std::vector<int>> product);

  static GroupTable cyclic(int n);
  static GroupTable direct_product(const GroupTable& a, const GroupTable& b);
  /// The group generated by closing `generators` under composition.
  static GroupTable from_permutations(std::span<const Permutation> generators);

  int order() const noexcept { return static_cast<int>(product_.size()); }
  int identity_index() const noexcept { return identity_; }
  int product(int x, int y) const;
  int inverse(int x) const;
  const std::vector<std::vector<int>>& table() const noexcept { return product_; }

  friend bool operator==(const GroupTable&, const GroupTable&) = default;

 private:
  std::vector<std::vector<int>> product_;
  int identity_ = 0;
};

inline constexpr int kMaxGainDegree = 1024;

/// Encodes a gain-group element as a permutation of [k*n + 1]. Element
/// indices play the role of the fixed bijection with [n] (index e <-> e+1).
/// Within each block j of n points, point n*j + r maps to
/// n*j + 1 + product(r - 1, element); the last point is fixed.
/// Under this convention encode(g*h) == compose(encode(h), encode(g)).
Permutation gain_encode(const GroupTable& group, int k, int element);

}  // namespace slc
