#include "slc/perm.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "slc/error.hpp"

namespace slc {
namespace {

using Images = std::vector<int>;

TEST(Identity, ImagesAreFixedPoints) {
  EXPECT_EQ(Permutation::identity(4).images(), (Images{1, 2, 3, 4}));
  EXPECT_EQ(Permutation::identity(1).images(), (Images{1}));
  EXPECT_TRUE(Permutation::identity(4).is_identity());
  const auto p = parse_cycles("(123)", 4);
  EXPECT_EQ(compose(Permutation::identity(4), p), p);
}

TEST(Identity, RejectsZeroSize) {
  try {
    Permutation::identity(0);
    FAIL() << "expected invalid-size";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_size);
  }
}

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({1, 1, 3}), Error);
  EXPECT_THROW(Permutation({1, 2, 4}), Error);
  EXPECT_THROW(Permutation(std::vector<int>{}), Error);
}

TEST(ParseCycles, KnownForms) {
  EXPECT_EQ(parse_cycles("(123)", 4).images(), (Images{2, 3, 1, 4}));
  EXPECT_EQ(parse_cycles("id", 4).images(), (Images{1, 2, 3, 4}));
  EXPECT_EQ(parse_cycles("(12)(34)", 4).images(), (Images{2, 1, 4, 3}));
  EXPECT_EQ(parse_cycles(" (1 2) (3,4) ", 4).images(), (Images{2, 1, 4, 3}));
  EXPECT_EQ(parse_cycles("(1)", 3).images(), (Images{1, 2, 3}));
}

TEST(ParseCycles, MultiDigitSymbolsNeedDelimiters) {
  const auto p = parse_cycles("(1,12)", 12);
  EXPECT_EQ(p(1), 12);
  EXPECT_EQ(p(12), 1);
  EXPECT_EQ(p.to_cycles(), "(1,12)");
  // Without a delimiter "12" is two symbols.
  EXPECT_EQ(parse_cycles("(12)", 12)(1), 2);
}

TEST(ParseCycles, ErrorsCarryPosition) {
  auto position_of = [](std::string_view text, int k) -> std::size_t {
    try {
      parse_cycles(text, k);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string_view::npos;
  };
  EXPECT_EQ(position_of("(125)", 4), 3u);   // out of range
  EXPECT_EQ(position_of("(12)(23)", 4), 5u);  // repeated across cycles
  EXPECT_EQ(position_of("(12", 4), 3u);      // unbalanced
  EXPECT_EQ(position_of("12)", 4), 0u);      // missing '('
  EXPECT_EQ(position_of("()", 4), 0u);       // empty cycle
  EXPECT_EQ(position_of("(1a)", 4), 2u);
  EXPECT_EQ(position_of("", 4), 0u);
  EXPECT_EQ(position_of("idx", 4), 2u);
}

TEST(Compose, AppliesRightOperandFirst) {
  const auto c123 = parse_cycles("(123)", 4);
  // 1 -> 2 -> 3, 2 -> 3 -> 1, 3 -> 1 -> 2
  EXPECT_EQ(compose(c123, c123).images(), (Images{3, 1, 2, 4}));
  EXPECT_EQ(compose(c123, c123).to_cycles(), "(132)");
  EXPECT_EQ(compose(parse_cycles("(12)", 4), parse_cycles("(34)", 4)).images(),
            (Images{2, 1, 4, 3}));
  const auto p = parse_cycles("(1342)", 4);
  EXPECT_TRUE(compose(p, p.inverse()).is_identity());
  // (12) after (123): 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2
  EXPECT_EQ(compose(parse_cycles("(12)", 3), parse_cycles("(123)", 3)).images(),
            (Images{1, 3, 2}));
}

TEST(Compose, SizeMismatch) {
  try {
    compose(Permutation::identity(3), Permutation::identity(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::size_mismatch);
  }
}

TEST(Inverse, Examples) {
  EXPECT_EQ(parse_cycles("(1234)", 4).inverse(), parse_cycles("(1432)", 4));
  EXPECT_TRUE(Permutation::identity(4).inverse().is_identity());
  const auto inv = parse_cycles("(12)(34)", 4);
  EXPECT_EQ(inv.inverse(), inv);
}

TEST(ConjugateSet, Examples) {
  const PermSet s{4, {Permutation::identity(4), parse_cycles("(123)", 4)}};
  // (12)(123)(12): 1 -> 3, 3 -> 2, 2 -> 1
  const PermSet expected{4, {Permutation::identity(4), Permutation{3, 1, 2, 4}}};
  EXPECT_EQ(conjugate_set(s, parse_cycles("(12)", 4)), expected);

  const PermSet id_only{4, {Permutation::identity(4)}};
  EXPECT_EQ(conjugate_set(id_only, parse_cycles("(1324)", 4)), id_only);

  const PermSet four{4, {Permutation::identity(4), parse_cycles("(1234)", 4)}};
  const PermSet four_conj{4, {Permutation::identity(4), Permutation{4, 1, 2, 3}}};
  EXPECT_EQ(conjugate_set(four, parse_cycles("(13)", 4)), four_conj);
  EXPECT_EQ(Permutation({4, 1, 2, 3}).to_cycles(), "(1432)");

  EXPECT_THROW(conjugate_set(s, Permutation::identity(3)), Error);
}

TEST(ConjugacyClassRep, ByCycleType) {
  EXPECT_EQ(conjugacy_class_rep(parse_cycles("(13)", 4)).to_cycles(), "(12)");
  EXPECT_EQ(conjugacy_class_rep(parse_cycles("(1432)", 4)).to_cycles(), "(1234)");
  EXPECT_EQ(conjugacy_class_rep(parse_cycles("(14)(23)", 4)).to_cycles(), "(12)(34)");
  EXPECT_EQ(conjugacy_class_rep(parse_cycles("(243)", 4)).to_cycles(), "(123)");
  try {
    conjugacy_class_rep(Permutation::identity(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::no_representative);
  }
}

TEST(ConjugatingPermutation, MapsBetweenClassMembers) {
  const auto all = symmetric_group(4);
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (a.cycle_type() != b.cycle_type()) {
        EXPECT_THROW(conjugating_permutation(a, b), Error);
        continue;
      }
      EXPECT_EQ(conjugate(a, conjugating_permutation(a, b)), b);
    }
  }
}

TEST(SymmetricGroup, Sizes) {
  EXPECT_EQ(symmetric_group(1).size(), 1u);
  EXPECT_TRUE(symmetric_group(1).contains_id());
  EXPECT_EQ(symmetric_group(3).size(), 6u);
  const auto s4 = symmetric_group(4);
  EXPECT_EQ(s4.size(), 24u);
  EXPECT_TRUE(s4.contains(parse_cycles("(123)", 4)));
  EXPECT_TRUE(s4.contains(parse_cycles("(1234)", 4)));
  try {
    symmetric_group(9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::resource_limit);
  }
}

TEST(CyclicShiftSet, Examples) {
  const PermSet z2{2, {Permutation::identity(2), Permutation{2, 1}}};
  EXPECT_EQ(cyclic_shift_set(2), z2);
  EXPECT_TRUE(cyclic_shift_set(4).contains(parse_cycles("(1234)", 4)));
  EXPECT_EQ(cyclic_shift(4, 1).images(), (Images{2, 3, 4, 1}));
  for (int k = 1; k <= 6; ++k) {
    EXPECT_TRUE(cyclic_shift(k, 0).is_identity());
    EXPECT_EQ(cyclic_shift_set(k).size(), static_cast<std::size_t>(k));
  }
}

TEST(NegationPermutation, SignedFlavours) {
  EXPECT_EQ(negation_permutation(4, SignedMode::natural).to_cycles(), "(12)(34)");
  EXPECT_EQ(negation_permutation(4, SignedMode::cyclic).to_cycles(), "(12)");
  EXPECT_EQ(negation_permutation(3, SignedMode::natural).to_cycles(), "(12)");
  EXPECT_EQ(negation_permutation(3, SignedMode::cyclic).to_cycles(), "(12)");
  EXPECT_TRUE(negation_permutation(1, SignedMode::natural).is_identity());
  EXPECT_EQ(negation_permutation(6, SignedMode::cyclic).to_cycles(), "(12)(34)");
}

TEST(PermSet, KeepsSortedUniqueMembers) {
  PermSet s(3);
  EXPECT_TRUE(s.insert(parse_cycles("(12)", 3)));
  EXPECT_FALSE(s.insert(parse_cycles("(12)", 3)));
  EXPECT_TRUE(s.insert(Permutation::identity(3)));
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.contains_id());
  EXPECT_THROW(s.insert(Permutation::identity(4)), Error);
}

// --- properties ------------------------------------------------------------

Permutation random_perm(std::mt19937_64& rng, int k) {
  std::vector<int> images(k);
  for (int i = 0; i < k; ++i) images[i] = i + 1;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

TEST(PermProperties, InverseLaw) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = random_perm(rng, 1 + trial % 12);
    EXPECT_TRUE(compose(p, p.inverse()).is_identity());
    EXPECT_TRUE(compose(p.inverse(), p).is_identity());
  }
}

TEST(PermProperties, CyclesRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int k = 1 + trial % 14;
    const auto p = random_perm(rng, k);
    EXPECT_EQ(parse_cycles(p.to_cycles(), k), p) << p.to_cycles();
  }
}

TEST(PermProperties, ConjugateSetLaws) {
  std::mt19937_64 rng(13);
  std::bernoulli_distribution coin(0.3);
  const auto s4 = symmetric_group(4);
  for (int trial = 0; trial < 200; ++trial) {
    PermSet s(4);
    for (const auto& p : s4) {
      if (coin(rng)) s.insert(p);
    }
    const auto pi = random_perm(rng, 4);
    EXPECT_EQ(conjugate_set(s, Permutation::identity(4)), s);
    EXPECT_EQ(conjugate_set(s, pi).size(), s.size());
    EXPECT_EQ(conjugate_set(conjugate_set(s, pi), pi.inverse()), s);
  }
}

TEST(PermProperties, ClassRepIsConjugationInvariant) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = random_perm(rng, 4);
    if (p.is_identity()) continue;
    const auto rho = random_perm(rng, 4);
    EXPECT_EQ(conjugacy_class_rep(conjugate(p, rho)), conjugacy_class_rep(p));
  }
}

}  // namespace
}  // namespace slc
