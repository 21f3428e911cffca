#include "slc/group.hpp"

#include <map>

#include "slc/error.hpp"

namespace slc {

GroupTable::GroupTable(std::vector<std::vector<int>> product) : product_(std::move(product)) {
  const int n = order();
  if (n < 1) throw Error(Errc::invalid_size, "group must have at least one element");
  for (const auto& row : product_) {
    if (static_cast<int>(row.size()) != n) {
      throw Error(Errc::invariant, "group table is not square");
    }
    for (int v : row) {
      if (v < 0 || v >= n) throw Error(Errc::invariant, "group table is not closed");
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (product_[product_[x][y]][z] != product_[x][product_[y][z]]) {
          throw Error(Errc::invariant, "group table is not associative at (" + std::to_string(x) +
                                           "," + std::to_string(y) + "," + std::to_string(z) + ")");
        }
      }
    }
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = product_[e][x] == x && product_[x][e] == x;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw Error(Errc::invariant, "group table has no identity");
  for (int x = 0; x < n; ++x) {
    bool has_inverse = false;
    for (int y = 0; y < n && !has_inverse; ++y) {
      has_inverse = product_[x][y] == identity_ && product_[y][x] == identity_;
    }
    if (!has_inverse) {
      throw Error(Errc::invariant, "element " + std::to_string(x) + " has no inverse");
    }
  }
}

GroupTable GroupTable::cyclic(int n) {
  if (n < 1) throw Error(Errc::invalid_size, "cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) t[x][y] = (x + y) % n;
  }
  return GroupTable(std::move(t));
}

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
  const int na = a.order();
  const int nb = b.order();
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  for (int x = 0; x < na * nb; ++x) {
    for (int y = 0; y < na * nb; ++y) {
      t[x][y] = a.product(x / nb, y / nb) * nb + b.product(x % nb, y % nb);
    }
  }
  return GroupTable(std::move(t));
}

GroupTable GroupTable::from_permutations(std::span<const Permutation> generators) {
  if (generators.empty()) throw Error(Errc::invalid_size, "no generators given");
  const int k = generators.front().k();
  std::vector<Permutation> elements{Permutation::identity(k)};
  std::map<Permutation, int> index{{elements.front(), 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) {
      Permutation next = compose(elements[i], g);
      if (index.emplace(next, static_cast<int>(elements.size())).second) {
        elements.push_back(std::move(next));
        if (elements.size() > 40320) {
          throw Error(Errc::resource_limit, "generated group is too large for a table");
        }
      }
    }
  }
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) t[x][y] = index.at(compose(elements[x], elements[y]));
  }
  return GroupTable(std::move(t));
}

int GroupTable::product(int x, int y) const {
  if (x < 0 || x >= order() || y < 0 || y >= order()) {
    throw Error(Errc::domain, "group element index out of range");
  }
  return product_[x][y];
}

int GroupTable::inverse(int x) const {
  for (int y = 0; y < order(); ++y) {
    if (product(x, y) == identity_) return y;
  }
  throw Error(Errc::invariant, "no inverse");  // unreachable for validated tables
}

Permutation gain_encode(const GroupTable& group, int k, int element) {
  if (k < 1) throw Error(Errc::invalid_size, "k must be positive");
  const int n = group.order();
  if (element < 0 || element >= n) {
    throw Error(Errc::domain, "gain element index " + std::to_string(element) + " out of range");
  }
  const long degree = static_cast<long>(k) * n + 1;
  if (degree > kMaxGainDegree) {
    throw Error(Errc::resource_limit, "encoded colour count " + std::to_string(degree) +
                                          " exceeds " + std::to_string(kMaxGainDegree));
  }
  std::vector<int> images(degree);
  for (int j = 0; j < k; ++j) {
    for (int r = 1; r <= n; ++r) images[n * j + r - 1] = n * j + group.product(r - 1, element) + 1;
  }
  images[degree - 1] = static_cast<int>(degree);
  return Permutation(std::move(images));
}

}  // namespace slc
