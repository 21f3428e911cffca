#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace slc {

/// A bijection of [k] = {1, ..., k}. Points are 1-indexed everywhere in the
/// public interface; `images()[i - 1]` is the image of `i`.
class Permutation {
 public:
  /// Validates that `images` is a bijection of {1..images.size()}.
  explicit Permutation(std::vector<int> images);
  Permutation(std::initializer_list<int> images)
      : Permutation(std::vector<int>(images)) {}

  static Permutation identity(int k);

  int k() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int point) const;
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Sorted lengths of all cycles, fixed points included (sums to k).
  std::vector<int> cycle_type() const;

  /// Disjoint cycle notation, "id" for the identity. Cycles start at their
  /// smallest point and are ordered by it; fixed points are omitted. For
  /// k > 9 symbols are comma separated, e.g. "(1,12)".
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    if (auto c = a.k() <=> b.k(); c != 0) return c;
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<int> images) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation&, const Permutation&);

  std::vector<int> images_;
};

/// Parses "id" or disjoint cycles such as "(123)", "(12)(34)", "(1,12)(3 4)".
/// Throws ParseError (with character position) on malformed input,
/// out-of-range symbols, or symbols repeated across cycles.
Permutation parse_cycles(std::string_view text, int k);

/// compose(p, q)(i) = p(q(i)): q is applied first.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation inverse(const Permutation& p) { return p.inverse(); }

/// p * q * p^{-1}.
Permutation conjugate(const Permutation& sigma, const Permutation& by);

/// A finite set of permutations of a common [k], stored sorted and
/// duplicate-free.
class PermSet {
 public:
  explicit PermSet(int k);
  PermSet(int k, std::span<const Permutation> members);
  PermSet(int k, std::initializer_list<Permutation> members)
      : PermSet(k, std::span<const Permutation>(members.begin(), members.size())) {}

  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(const Permutation& p) const;
  bool contains_id() const;
  bool is_subset_of(const PermSet& other) const;

  /// Returns false if already present.
  bool insert(const Permutation& p);

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  const std::vector<Permutation>& members() const noexcept { return members_; }

  friend bool operator==(const PermSet&, const PermSet&) = default;

 private:
  int k_;
  std::vector<Permutation> members_;
};

/// {pi * sigma * pi^{-1} : sigma in S}.
PermSet conjugate_set(const PermSet& set, const Permutation& pi);

/// Canonical representative of the S_4 conjugacy class of a non-identity p:
/// one of (12), (12)(34), (123), (1234).
Permutation conjugacy_class_rep(const Permutation& p);

/// Some rho with rho * from * rho^{-1} = to, if from and to share a cycle type.
Permutation conjugating_permutation(const Permutation& from, const Permutation& to);

inline constexpr int kMaxSymmetricGroupDegree = 8;

/// All k! permutations of [k]; k is capped at kMaxSymmetricGroupDegree.
PermSet symmetric_group(int k);

/// The k shifts i -> ((i - 1 + a) mod k) + 1, a = 0..k-1.
Permutation cyclic_shift(int k, int a);
PermSet cyclic_shift_set(int k);

enum class SignedMode {
  natural,  // colours N_k, q = floor(k/2) swapped pairs
  cyclic,   // colours Z_k, q = ceil(k/2) - 1 swapped pairs
};

/// (1 2)(3 4)...(2q-1 2q) with q chosen by the signed-colouring flavour.
Permutation negation_permutation(int k, SignedMode mode);

}  // namespace slc
