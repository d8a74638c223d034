#include <gtest/gtest.h>

#include "subshift/construction.hpp"
#include "subshift/group.hpp"

#include "group_fixtures.hpp"

using namespace subshift;

namespace {

bool has_check(const ChainValidation& v, const std::string& check) {
  for (const auto& x : v.violations)
    if (x.check == check) return true;
  return false;
}

}  // namespace

TEST(ValidateChain, CyclicTowerPasses) {
  const ChainValidation v = validate_chain(fixtures::z2_z4_z8());
  EXPECT_TRUE(v.pass);
  EXPECT_TRUE(v.violations.empty());
  EXPECT_TRUE(validate_chain(fixtures::z2_s3()).pass);
}

TEST(ValidateChain, ImproperEmbeddingFails) {
  const ChainValidation v = validate_chain({{cyclic_group(2), cyclic_group(2)}, {{0, 1}}});
  EXPECT_FALSE(v.pass);
  EXPECT_TRUE(has_check(v, "proper"));
}

TEST(ValidateChain, NonAssociativeTableFailsWithWitness) {
  FiniteGroup bad = cyclic_group(4);
  // Identity and inverses intact, but (1*1)*2 = 1 while 1*(1*2) = 0.
  bad.cayley = {{0, 1, 2, 3}, {1, 3, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};
  const ChainValidation v = validate_chain({{cyclic_group(2), bad}, {{0, 2}}});
  EXPECT_FALSE(v.pass);
  ASSERT_TRUE(has_check(v, "associativity"));
  for (const auto& x : v.violations)
    if (x.check == "associativity") EXPECT_NE(x.detail.find("("), std::string::npos) << x.detail;
}

TEST(ValidateChain, EmbeddingDefectsAreNamed) {
  EXPECT_TRUE(has_check(validate_chain({{cyclic_group(2), cyclic_group(4)}, {{0, 1}}}),
                        "homomorphism"));
  EXPECT_TRUE(has_check(validate_chain({{cyclic_group(2), cyclic_group(4)}, {{0, 0}}}),
                        "injective"));
  EXPECT_TRUE(has_check(validate_chain({{cyclic_group(2), cyclic_group(4)}, {{0, 7}}}),
                        "embedding_range"));
  EXPECT_TRUE(has_check(validate_chain({{cyclic_group(2), cyclic_group(4)}, {{0}}}),
                        "embedding_size"));
  EXPECT_TRUE(has_check(validate_chain({{cyclic_group(2), cyclic_group(4)}, {}}), "shape"));
  EXPECT_TRUE(has_check(validate_chain({{cyclic_group(1), cyclic_group(2)}, {{0}}}), "min_order"));
}

TEST(ValidateChain, BrokenIdentityAndInverse) {
  FiniteGroup no_identity{"bad", {{1, 0}, {0, 1}}};
  EXPECT_TRUE(has_check(validate_chain({{no_identity}, {}}), "identity"));
  FiniteGroup not_closed{"bad", {{0, 1}, {1, 5}}};
  EXPECT_TRUE(has_check(validate_chain({{not_closed}, {}}), "closure"));
}

TEST(DeriveSpec, CyclicTowerParameters) {
  const ConstructionSpec spec = derive_spec(fixtures::z2_z4_z8(), {2, 2});
  EXPECT_EQ(spec.top_level(), 3u);
  EXPECT_EQ(spec.level(1).block_length, 1u);
  EXPECT_EQ(spec.level(2).index, 2u);
  EXPECT_EQ(spec.level(2).block_length, 36u);
  EXPECT_EQ(spec.level(2).repetition_threshold, 8u);
  EXPECT_EQ(spec.level(3).index, 2u);
  EXPECT_EQ(spec.level(3).block_length, 3024u);
  EXPECT_EQ(spec.level(2).coset_reps, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(spec.level(3).coset_reps, (std::vector<std::size_t>{0, 1}));
}

TEST(DeriveSpec, RejectsBadMultiplicities) {
  EXPECT_THROW(derive_spec(fixtures::z2_z4_z8(), {2, 1}), InputError);
  EXPECT_THROW(derive_spec(fixtures::z2_z4_z8(), {2}), InputError);
  EXPECT_THROW(derive_spec({{cyclic_group(2), cyclic_group(2)}, {{0, 1}}}, {2}), InputError);
}

TEST(DeriveSpec, RightCosetRepresentativesCoverEachCosetOnce) {
  for (const GroupChain& chain : {fixtures::z2_z4_z8(), fixtures::z2_s3()}) {
    const ConstructionSpec spec = derive_spec(chain, std::vector<std::uint64_t>(chain.levels() - 1, 2));
    for (std::size_t k = 2; k <= spec.top_level(); ++k) {
      const auto& lvl = spec.level(k);
      const FiniteGroup& big = spec.group(k);
      const FiniteGroup& small = spec.group(k - 1);
      EXPECT_EQ(lvl.coset_reps.front(), 0u);
      std::vector<int> hits(big.order(), 0);
      for (std::size_t r : lvl.coset_reps)
        for (std::size_t h = 0; h < small.order(); ++h)
          ++hits[big.mul(chain.embeddings[k - 2][h], r)];
      for (int c : hits) EXPECT_EQ(c, 1);
      EXPECT_TRUE(std::is_sorted(lvl.coset_reps.begin(), lvl.coset_reps.end()));
      for (std::size_t g = 0; g < big.order(); ++g) {
        const auto& d = lvl.decomposition[g];
        EXPECT_EQ(big.mul(chain.embeddings[k - 2][d.element], lvl.coset_reps[d.coset - 1]), g);
      }
    }
  }
}

TEST(DeriveSpec, OverflowIsAnInputError) {
  EXPECT_THROW(derive_spec(fixtures::z2_z4_z8(), {std::uint64_t{1} << 40, std::uint64_t{1} << 40}),
               InputError);
}
