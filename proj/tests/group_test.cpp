#include "slc/group.hpp"

#include <gtest/gtest.h>

#include "slc/error.hpp"

namespace slc {
namespace {

// All groups of order at most 6, up to isomorphism.
std::vector<GroupTable> small_groups() {
  const std::vector<Permutation> s3_generators{Permutation{2, 1, 3}, Permutation{2, 3, 1}};
  return {GroupTable::cyclic(1),
          GroupTable::cyclic(2),
          GroupTable::cyclic(3),
          GroupTable::cyclic(4),
          GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(2)),
          GroupTable::cyclic(5),
          GroupTable::cyclic(6),
          GroupTable::from_permutations(s3_generators)};
}

TEST(GroupTable, RejectsNonGroups) {
  EXPECT_THROW(GroupTable({{0, 1}, {1, 1}}), Error);           // 1 has no inverse
  EXPECT_THROW(GroupTable({{0, 1}, {1, 2}}), Error);           // not closed
  EXPECT_THROW(GroupTable({{1, 0}, {0, 0}}), Error);           // no identity / not assoc
  EXPECT_THROW(GroupTable(std::vector<std::vector<int>>{}), Error);
  // Latin square without associativity: x*y = (y - x) mod 3
  EXPECT_THROW(GroupTable({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}), Error);
}

TEST(GroupTable, SmallGroupOrders) {
  std::vector<int> orders;
  for (const auto& g : small_groups()) orders.push_back(g.order());
  EXPECT_EQ(orders, (std::vector<int>{1, 2, 3, 4, 4, 5, 6, 6}));
  const auto s3 = small_groups().back();
  EXPECT_EQ(s3.identity_index(), 0);
  bool abelian = true;
  for (int x = 0; x < 6; ++x) {
    for (int y = 0; y < 6; ++y) abelian = abelian && s3.product(x, y) == s3.product(y, x);
  }
  EXPECT_FALSE(abelian);
}

TEST(GainEncode, Z2SingleBlock) {
  const auto z2 = GroupTable::cyclic(2);
  // pi'(1) = tau(0 * 1) = 2, pi'(2) = tau(1 * 1) = 1, pi'(3) = 3
  EXPECT_EQ(gain_encode(z2, 1, 1).images(), (std::vector<int>{2, 1, 3}));
  EXPECT_EQ(gain_encode(z2, 1, 1).to_cycles(), "(12)");
  EXPECT_TRUE(gain_encode(z2, 1, 0).is_identity());
}

TEST(GainEncode, Z2TwoBlocks) {
  EXPECT_EQ(gain_encode(GroupTable::cyclic(2), 2, 1).images(),
            (std::vector<int>{2, 1, 4, 3, 5}));
}

TEST(GainEncode, IdentityElementGivesIdentity) {
  for (const auto& g : small_groups()) {
    for (int k = 1; k <= 3; ++k) {
      EXPECT_TRUE(gain_encode(g, k, g.identity_index()).is_identity());
      EXPECT_EQ(gain_encode(g, k, g.identity_index()).k(), k * g.order() + 1);
    }
  }
}

TEST(GainEncode, ProductBecomesReversedComposition) {
  for (const auto& g : small_groups()) {
    for (int k = 1; k <= 2; ++k) {
      for (int x = 0; x < g.order(); ++x) {
        for (int y = 0; y < g.order(); ++y) {
          EXPECT_EQ(gain_encode(g, k, g.product(x, y)),
                    compose(gain_encode(g, k, y), gain_encode(g, k, x)));
        }
      }
    }
  }
}

TEST(GainEncode, Limits) {
  try {
    gain_encode(GroupTable::cyclic(2), 600, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::resource_limit);
  }
  EXPECT_THROW(gain_encode(GroupTable::cyclic(2), 1, 2), Error);
}

}  // namespace
}  // namespace slc
