#include "slc/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "slc/error.hpp"

namespace slc {

namespace {

void require_positive(int k) {
  if (k < 1) {
    throw Error(Errc::invalid_size, "permutation size must be positive, got " + std::to_string(k));
  }
}

void require_same_size(const Permutation& p, const Permutation& q) {
  if (p.k() != q.k()) {
    throw Error(Errc::size_mismatch, "permutation sizes differ: " + std::to_string(p.k()) +
                                         " vs " + std::to_string(q.k()));
  }
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int k = this->k();
  require_positive(k);
  std::vector<bool> seen(k, false);
  for (int i = 0; i < k; ++i) {
    const int v = images_[i];
    if (v < 1 || v > k) {
      throw Error(Errc::invariant, "image " + std::to_string(v) + " of point " +
                                       std::to_string(i + 1) + " outside [1," +
                                       std::to_string(k) + "]");
    }
    if (seen[v - 1]) {
      throw Error(Errc::invariant, "image " + std::to_string(v) + " repeated; not a bijection");
    }
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int k) {
  require_positive(k);
  std::vector<int> images(k);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(Unchecked{}, std::move(images));
}

int Permutation::operator()(int point) const {
  if (point < 1 || point > k()) {
    throw Error(Errc::domain, "point " + std::to_string(point) + " outside [1," +
                                  std::to_string(k()) + "]");
  }
  return images_[point - 1];
}

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < k(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < k(); ++i) inv[images_[i] - 1] = i + 1;
  return Permutation(Unchecked{}, std::move(inv));
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(k(), false);
  for (int start = 0; start < k(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (int i = start; !seen[i]; i = images_[i] - 1) {
      seen[i] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::string Permutation::to_cycles() const {
  if (is_identity()) return "id";
  const bool delimited = k() > 9;
  std::string out;
  std::vector<bool> seen(k(), false);
  for (int start = 0; start < k(); ++start) {
    if (seen[start] || images_[start] == start + 1) continue;
    out += '(';
    bool first = true;
    for (int i = start; !seen[i]; i = images_[i] - 1) {
      seen[i] = true;
      if (delimited && !first) out += ',';
      out += std::to_string(i + 1);
      first = false;
    }
    out += ')';
  }
  return out;
}

Permutation parse_cycles(std::string_view text, int k) {
  require_positive(k);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && is_space(text[pos])) ++pos;
  };

  skip_space();
  if (text.substr(pos).starts_with("id")) {
    pos += 2;
    skip_space();
    if (pos != text.size()) throw ParseError(pos, "trailing characters after 'id'");
    return Permutation::identity(k);
  }

  std::vector<int> images(k);
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(k, false);
  bool any_cycle = false;

  while (true) {
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw ParseError(pos, "expected '('");
    const std::size_t open = pos++;
    const std::size_t close = text.find_first_of("()", pos);
    if (close == std::string_view::npos || text[close] != ')') {
      throw ParseError(close == std::string_view::npos ? text.size() : close,
                       "unbalanced parentheses");
    }
    const std::string_view body = text.substr(pos, close - pos);
    const bool delimited = body.find(',') != std::string_view::npos ||
                           std::any_of(body.begin(), body.end(), is_space);

    std::vector<int> cycle;
    auto push_symbol = [&](int value, std::size_t at) {
      if (value < 1 || value > k) {
        throw ParseError(at, "symbol " + std::to_string(value) + " outside [1," +
                                 std::to_string(k) + "]");
      }
      if (used[value - 1]) {
        throw ParseError(at, "symbol " + std::to_string(value) + " repeated");
      }
      used[value - 1] = true;
      cycle.push_back(value);
    };

    std::size_t i = pos;
    while (i < close) {
      const char c = text[i];
      if (is_space(c) || (delimited && c == ',')) {
        ++i;
        continue;
      }
      if (!is_digit(c)) throw ParseError(i, std::string("unexpected character '") + c + "'");
      if (!delimited) {
        push_symbol(c - '0', i);
        ++i;
        continue;
      }
      const std::size_t token_start = i;
      long value = 0;
      while (i < close && is_digit(text[i])) {
        value = value * 10 + (text[i] - '0');
        if (value > k) value = static_cast<long>(k) + 1;
        ++i;
      }
      push_symbol(static_cast<int>(value), token_start);
    }
    if (cycle.empty()) throw ParseError(open, "empty cycle");
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      images[cycle[j] - 1] = cycle[(j + 1) % cycle.size()];
    }
    any_cycle = true;
    pos = close + 1;
  }
  if (!any_cycle) throw ParseError(pos, "empty permutation text");
  return Permutation(std::move(images));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_size(p, q);
  std::vector<int> images(p.k());
  for (int i = 0; i < p.k(); ++i) images[i] = p.images_[q.images_[i] - 1];
  return Permutation(Permutation::Unchecked{}, std::move(images));
}

Permutation conjugate(const Permutation& sigma, const Permutation& by) {
  return compose(by, compose(sigma, by.inverse()));
}

PermSet::PermSet(int k) : k_(k) { require_positive(k); }

PermSet::PermSet(int k, std::span<const Permutation> members) : PermSet(k) {
  for (const auto& p : members) insert(p);
}

bool PermSet::contains(const Permutation& p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

bool PermSet::contains_id() const { return contains(Permutation::identity(k_)); }

bool PermSet::is_subset_of(const PermSet& other) const {
  return k_ == other.k_ &&
         std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

bool PermSet::insert(const Permutation& p) {
  if (p.k() != k_) {
    throw Error(Errc::size_mismatch, "permutation of size " + std::to_string(p.k()) +
                                         " added to set over [" + std::to_string(k_) + "]");
  }
  auto it = std::lower_bound(members_.begin(), members_.end(), p);
  if (it != members_.end() && *it == p) return false;
  members_.insert(it, p);
  return true;
}

PermSet conjugate_set(const PermSet& set, const Permutation& pi) {
  if (pi.k() != set.k()) {
    throw Error(Errc::size_mismatch, "conjugating permutation has size " +
                                         std::to_string(pi.k()) + ", set has " +
                                         std::to_string(set.k()));
  }
  PermSet out(set.k());
  for (const auto& sigma : set) out.insert(conjugate(sigma, pi));
  return out;
}

Permutation conjugacy_class_rep(const Permutation& p) {
  if (p.k() != 4) {
    throw Error(Errc::invalid_size, "class representatives are defined for S_4 only");
  }
  const auto type = p.cycle_type();
  if (type == std::vector<int>{2, 1, 1}) return Permutation{2, 1, 3, 4};
  if (type == std::vector<int>{2, 2}) return Permutation{2, 1, 4, 3};
  if (type == std::vector<int>{3, 1}) return Permutation{2, 3, 1, 4};
  if (type == std::vector<int>{4}) return Permutation{2, 3, 4, 1};
  throw Error(Errc::no_representative, "identity has no non-trivial class representative");
}

Permutation conjugating_permutation(const Permutation& from, const Permutation& to) {
  require_same_size(from, to);
  if (from.cycle_type() != to.cycle_type()) {
    throw Error(Errc::domain, from.to_cycles() + " and " + to.to_cycles() + " are not conjugate");
  }
  // Walk the cycles of both in the same canonical order (longest first) and
  // send the j-th point of each cycle of `from` to the j-th point of the
  // matching cycle of `to`.
  auto cycles_longest_first = [](const Permutation& p) {
    std::vector<std::vector<int>> cycles;
    std::vector<bool> seen(p.k(), false);
    for (int s = 1; s <= p.k(); ++s) {
      if (seen[s - 1]) continue;
      std::vector<int> cyc;
      for (int i = s; !seen[i - 1]; i = p(i)) {
        seen[i - 1] = true;
        cyc.push_back(i);
      }
      cycles.push_back(std::move(cyc));
    }
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    return cycles;
  };
  const auto a = cycles_longest_first(from);
  const auto b = cycles_longest_first(to);
  std::vector<int> images(from.k());
  for (std::size_t c = 0; c < a.size(); ++c) {
    for (std::size_t j = 0; j < a[c].size(); ++j) images[a[c][j] - 1] = b[c][j];
  }
  return Permutation(std::move(images));
}

PermSet symmetric_group(int k) {
  require_positive(k);
  if (k > kMaxSymmetricGroupDegree) {
    throw Error(Errc::resource_limit, "symmetric group of degree " + std::to_string(k) +
                                          " exceeds the cap of " +
                                          std::to_string(kMaxSymmetricGroupDegree));
  }
  PermSet out(k);
  std::vector<int> images(k);
  std::iota(images.begin(), images.end(), 1);
  do {
    out.insert(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Permutation cyclic_shift(int k, int a) {
  require_positive(k);
  const int shift = ((a % k) + k) % k;
  std::vector<int> images(k);
  for (int i = 1; i <= k; ++i) images[i - 1] = ((i - 1 + shift) % k) + 1;
  return Permutation(std::move(images));
}

PermSet cyclic_shift_set(int k) {
  PermSet out(k);
  for (int a = 0; a < k; ++a) out.insert(cyclic_shift(k, a));
  return out;
}

Permutation negation_permutation(int k, SignedMode mode) {
  require_positive(k);
  const int q = mode == SignedMode::natural ? k / 2 : (k + 1) / 2 - 1;
  std::vector<int> images(k);
  std::iota(images.begin(), images.end(), 1);
  for (int i = 0; i < q; ++i) std::swap(images[2 * i], images[2 * i + 1]);
  return Permutation(std::move(images));
}

}  // namespace slc
