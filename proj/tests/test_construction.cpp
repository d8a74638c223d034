#include <gtest/gtest.h>

#include <string>

#include "subshift/construction.hpp"

#include "group_fixtures.hpp"
#include "oracles.hpp"

using namespace subshift;

namespace {

std::string run(char c, std::size_t n) { return std::string(n, c); }

/// Direct string evaluation of the defining concatenation, with its own
/// coset search.
std::vector<std::string> naive_words(const GroupChain& chain, const std::vector<std::uint64_t>& b,
                                     std::size_t k) {
  std::vector<std::string> words;
  for (std::size_t g = 0; g < chain.groups[0].order(); ++g) words.push_back(std::string(1, char('0' + g)));
  for (std::size_t level = 1; level < k; ++level) {
    const FiniteGroup& small = chain.groups[level - 1];
    const FiniteGroup& big = chain.groups[level];
    const auto& emb = chain.embeddings[level - 1];
    std::vector<std::size_t> reps;
    std::vector<bool> covered(big.order(), false);
    for (std::size_t g = 0; g < big.order(); ++g) {
      if (covered[g]) continue;
      reps.push_back(g);
      for (std::size_t h = 0; h < small.order(); ++h) covered[big.mul(emb[h], g)] = true;
    }
    const std::uint64_t bb = b[level - 1];
    const std::uint64_t q = reps.size();
    std::vector<std::string> next(big.order());
    for (std::size_t g = 0; g < big.order(); ++g) {
      for (std::size_t i = 1; i <= q; ++i)
        for (std::size_t gp = 0; gp < small.order(); ++gp) {
          if (big.mul(emb[gp], reps[i - 1]) != g) continue;
          auto w = [&](std::size_t j) { return words[small.mul(gp, j - 1)]; };
          auto rep = [](const std::string& s, std::uint64_t n) {
            std::string out;
            for (std::uint64_t c = 0; c < n; ++c) out += s;
            return out;
          };
          std::string s = rep(w(2), 2 * bb * q);
          for (std::size_t x = 1; x <= small.order(); ++x)
            for (std::size_t y = 1; y <= small.order(); ++y) s += rep(w(x), bb) + rep(w(y), bb);
          s += rep(w(1), i * bb) + rep(w(2), bb * (3 * q - i));
          next[g] = s;
        }
    }
    words = std::move(next);
  }
  return words;
}

std::string text(const Word& w) { return oracle::str(w); }

}  // namespace

TEST(BuildAk, LevelTwoWordsOfTheCyclicTower) {
  const ConstructionSpec spec = derive_spec(fixtures::z2_z4_z8(), {2, 2});
  const AkWordFamily a2 = build_Ak(spec, 2);
  ASSERT_EQ(a2.order, 4u);
  const char a = '0', b = '1';
  EXPECT_EQ(text(a2.word(0)),
            run(b, 8) + run(a, 6) + run(b, 4) + run(a, 2) + run(b, 4) + run(a, 2) + run(b, 10));
  // g = r_2 = index 1: coset 2 with g' = id.
  EXPECT_EQ(text(a2.word(1)),
            run(b, 8) + run(a, 6) + run(b, 4) + run(a, 2) + run(b, 4) + run(a, 4) + run(b, 8));
  // g = embedded h_2 = index 2: the symbol swap of w_id.
  EXPECT_EQ(text(a2.word(2)),
            run(a, 8) + run(b, 6) + run(a, 4) + run(b, 2) + run(a, 4) + run(b, 2) + run(a, 10));
  for (const Word& w : a2.words()) EXPECT_EQ(w.size(), 36u);
}

TEST(BuildAk, MatchesDirectStringEvaluation) {
  for (const GroupChain& chain : {fixtures::z2_z4_z8(), fixtures::z2_s3()}) {
    const std::vector<std::uint64_t> b(chain.levels() - 1, 2);
    const ConstructionSpec spec = derive_spec(chain, b);
    for (std::size_t k = 1; k <= spec.top_level(); ++k) {
      const auto expected = naive_words(chain, b, k);
      const AkWordFamily fam = build_Ak(spec, k);
      ASSERT_EQ(fam.order, expected.size());
      for (std::size_t g = 0; g < fam.order; ++g) EXPECT_EQ(text(fam.word(g)), expected[g]) << "k=" << k;
    }
  }
  const std::vector<std::uint64_t> b3{3, 2};
  const ConstructionSpec spec = derive_spec(fixtures::z2_z4_z8(), b3);
  const auto expected = naive_words(fixtures::z2_z4_z8(), b3, 3);
  for (std::size_t g = 0; g < 8; ++g) EXPECT_EQ(text(build_Ak(spec, 3).word(g)), expected[g]);
}

TEST(BuildAk, LengthLawInjectivityAndBlockCount) {
  for (const std::vector<std::uint64_t>& b :
       {std::vector<std::uint64_t>{2, 2}, {3, 2}, {2, 4}, {5, 3}}) {
    const ConstructionSpec spec = derive_spec(fixtures::z2_z4_z8(), b);
    for (std::size_t k = 1; k <= spec.top_level(); ++k) {
      const AkWordFamily fam = build_Ak(spec, k);
      const auto words = fam.words();
      for (const Word& w : words) EXPECT_EQ(w.size(), spec.level(k).block_length);
      EXPECT_EQ(std::set<Word>(words.begin(), words.end()).size(), words.size());
      if (k == 1) continue;
      const std::uint64_t bb = spec.level(k).multiplicity, q = spec.level(k).index;
      const std::uint64_t h = spec.level(k - 1).order;
      for (std::size_t g = 0; g < fam.order; ++g)
        EXPECT_EQ(fam.blocks(g).size(), bb * (2 * h * h + 5 * q));
    }
  }
}

TEST(BuildAk, LevelOutsideSpecIsRejected) {
  const ConstructionSpec spec = derive_spec(fixtures::z2_z4_z8(), {2, 2});
  EXPECT_THROW(build_Ak(spec, 0), InputError);
  EXPECT_THROW(build_Ak(spec, 4), InputError);
}

TEST(PiApply, LeftMultiplicationOfSubscripts) {
  const ConstructionSpec spec = derive_spec(fixtures::z2_z4_z8(), {2, 2});
  const AkWordFamily a2 = build_Ak(spec, 2);
  EXPECT_EQ(pi_apply(spec, 1, 1, a2.word(0)), a2.word(2));
  for (std::size_t g = 0; g < 4; ++g) EXPECT_EQ(pi_apply(spec, 2, 0, a2.word(g)), a2.word(g));

  const AkWordFamily a3 = build_Ak(spec, 3);
  const BlockDecoder dec2(a2);
  for (std::size_t x = 0; x < 8; ++x) {
    const Word wx = a3.word(x);
    for (std::size_t g = 0; g < 4; ++g) {
      // pi_{2,g} on w_x^(3) equals w_{embed(g) x}^(3).
      const std::size_t lifted = spec.embed(g, 2, 3);
      EXPECT_EQ(pi_apply(spec.group(2), a2, dec2, g, wx), a3.word(spec.group(3).mul(lifted, x)));
    }
    for (std::size_t g = 0; g < 8; ++g)
      EXPECT_EQ(pi_apply(spec, 3, g, wx), a3.word(spec.group(3).mul(g, x)));
  }
}

TEST(PiApply, MisalignedInputIsRejected) {
  const ConstructionSpec spec = derive_spec(fixtures::z2_z4_z8(), {2, 2});
  Word w = build_Ak(spec, 2).word(0);
  EXPECT_THROW(pi_apply(spec, 2, 1, Word(w.begin() + 1, w.end())), DomainError);
  w[5] ^= 1;
  EXPECT_THROW(pi_apply(spec, 2, 1, w), DomainError);
}

TEST(ConstructionSeeds, CoverEveryPairJunction) {
  const ConstructionSpec spec = derive_spec(fixtures::z2_z4_z8(), {2, 2});
  const auto seeds = construction_seeds(spec, 2, 10);
  EXPECT_EQ(seeds.size(), 4u + 16u);
  EXPECT_THROW(construction_seeds(spec, 2, 37), DepthError);
}
