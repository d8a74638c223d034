#include <gtest/gtest.h>

#include "subshift/branch.hpp"
#include "subshift/io.hpp"

#include "oracles.hpp"

using namespace subshift;

namespace {

const std::string kData = SUBSHIFT_DATA_DIR;

LanguageTable load(const std::string& name, std::size_t depth) {
  return build_language(load_source(kData + "/" + name), depth);
}

oracle::WordSet as_set(const std::vector<Word>& words) { return {words.begin(), words.end()}; }

oracle::Lang as_lang(const LanguageTable& t) {
  oracle::Lang L{t.alphabet().size(), {{}}};
  for (std::size_t n = 1; n <= t.depth(); ++n) {
    oracle::WordSet s;
    for (WordView w : t.level(n)) s.emplace(w.begin(), w.end());
    L.levels.push_back(std::move(s));
  }
  return L;
}

oracle::WordSet words(std::initializer_list<const char*> list) {
  oracle::WordSet s;
  for (const char* w : list) s.insert(oracle::word(w));
  return s;
}

const char* kSources[] = {"golden_mean.json", "thue_morse.json", "full2.json", "fibonacci.json",
                          "period2.json"};

}  // namespace

TEST(BranchWords, GoldenMeanLevelTwo) {
  const BranchWordSet b = branch_words(load("golden_mean.json", 6), 2);
  EXPECT_EQ(as_set(b.right), words({"001", "101"}));
  EXPECT_EQ(as_set(b.left), words({"100", "101"}));
  EXPECT_FALSE(b.depth_limited);
}

TEST(BranchWords, PeriodicOrbitHasNone) {
  const BranchWordSet b = branch_words(load("period2.json", 8), 2);
  EXPECT_TRUE(b.right.empty());
  EXPECT_TRUE(b.left.empty());
}

TEST(BranchWords, FullShiftLevelOneAreTheSymbols) {
  const BranchWordSet b = branch_words(load("full2.json", 6), 1);
  EXPECT_EQ(as_set(b.right), words({"0", "1"}));
  EXPECT_EQ(as_set(b.left), words({"0", "1"}));
}

TEST(BranchWords, DepthLimitedWhenTableIsShallow) {
  // Fibonacci at n = 3 needs depth n + c_n = 7 for certified maximality.
  EXPECT_TRUE(branch_words(load("fibonacci.json", 5), 3).depth_limited);
  EXPECT_FALSE(branch_words(load("fibonacci.json", 12), 3).depth_limited);
  EXPECT_THROW(branch_words(load("fibonacci.json", 5), 5), DepthError);
}

TEST(BranchWords, AgreeWithDefinitionOracle) {
  for (const char* name : kSources) {
    const LanguageTable t = load(name, 20);
    const oracle::Lang L = as_lang(t);
    for (std::size_t n = 1; n + t.complexity(n) <= 20; ++n) {
      const BranchWordSet b = branch_words(t, n);
      EXPECT_EQ(as_set(b.right), oracle::branch(L, n, true)) << name << " n = " << n;
      EXPECT_EQ(as_set(b.left), oracle::branch(L, n, false)) << name << " n = " << n;
    }
  }
}

TEST(BranchWords, EveryMemberSatisfiesTheDefiningConditions) {
  for (const char* name : kSources) {
    const LanguageTable t = load(name, 20);
    for (std::size_t n = 1; n + t.complexity(n) <= 20; ++n) {
      const BranchWordSet b = branch_words(t, n);
      for (Side side : {Side::right, Side::left}) {
        const auto special = as_set(special_words(t, n, side));
        for (const Word& w : side == Side::right ? b.right : b.left) {
          ASSERT_TRUE(t.contains(w));
          std::set<Word> seen;
          const std::size_t count = w.size() - n + 1;
          for (std::size_t i = 0; i < count; ++i) {
            Word s(w.begin() + static_cast<std::ptrdiff_t>(i),
                   w.begin() + static_cast<std::ptrdiff_t>(i + n));
            EXPECT_TRUE(seen.insert(s).second) << "repeated subword in " << oracle::str(w);
            const bool anchor = side == Side::right ? i == 0 : i + 1 == count;
            EXPECT_EQ(anchor, special.count(s) > 0) << oracle::str(w);
          }
        }
      }
    }
  }
}

TEST(BranchFacts, DocumentedValues) {
  const BranchFactsReport gm = verify_branch_facts(load("golden_mean.json", 6), 2);
  EXPECT_EQ(gm.right_count + gm.left_count, 4u);
  EXPECT_EQ(gm.count_bound, 8u);
  EXPECT_EQ(gm.max_length, 3u);
  EXPECT_EQ(gm.length_bound, 5u);
  EXPECT_TRUE(gm.pass);

  const BranchFactsReport full = verify_branch_facts(load("full2.json", 6), 1);
  EXPECT_EQ(full.right_count + full.left_count, 4u);
  EXPECT_EQ(full.count_bound, 8u);
  EXPECT_EQ(full.max_length, 1u);
  EXPECT_EQ(full.length_bound, 3u);
  EXPECT_TRUE(full.pass);

  const BranchFactsReport per = verify_branch_facts(load("period2.json", 8), 3);
  EXPECT_EQ(per.right_count + per.left_count, 0u);
  EXPECT_EQ(per.count_bound, 0u);
  EXPECT_TRUE(per.pass);
}

TEST(BranchFacts, HoldWheneverDepthCoversTheLengthBound) {
  for (const char* name : kSources) {
    const LanguageTable t = load(name, 20);
    for (std::size_t n = 1; n + t.complexity(n) <= 20; ++n)
      EXPECT_TRUE(verify_branch_facts(t, n).pass) << name << " n = " << n;
  }
}

TEST(PeriodicWitnesses, DocumentedValues) {
  EXPECT_TRUE(periodic_witnesses(load("golden_mean.json", 6), 2).witnesses.empty());
  EXPECT_TRUE(periodic_witnesses(load("full2.json", 6), 1).witnesses.empty());

  const PeriodicWitnessReport per = periodic_witnesses(load("period2.json", 8), 2);
  ASSERT_EQ(per.witnesses.size(), 2u);
  EXPECT_TRUE(per.certified());
  EXPECT_EQ(oracle::str(per.witnesses[0].word), "01");
  EXPECT_EQ(per.witnesses[0].period, 2u);
  EXPECT_EQ(oracle::str(per.witnesses[1].word), "10");
  EXPECT_EQ(per.witnesses[1].period, 2u);
  EXPECT_EQ(oracle::str(Word(per.witnesses[0].fundamental_block().begin(),
                             per.witnesses[0].fundamental_block().end())),
            "01");
}

TEST(PeriodicWitnesses, CoverageDichotomy) {
  for (const char* name : kSources) {
    const LanguageTable t = load(name, 20);
    for (std::size_t n = 1; n + t.complexity(n) <= 20; ++n) {
      const BranchWordSet b = branch_words(t, n);
      const PeriodicWitnessReport p = periodic_witnesses(t, n);
      EXPECT_TRUE(p.certified()) << name << " n = " << n;
      std::set<Word> witnessed;
      for (const auto& w : p.witnesses) witnessed.insert(w.word);
      for (WordView w : t.level(n)) {
        bool covered = false;
        for (const auto* side : {&b.right, &b.left})
          for (const Word& v : *side) covered = covered || is_subword(w, v);
        const bool witness = witnessed.count(Word(w.begin(), w.end())) > 0;
        EXPECT_NE(covered, witness) << name << " n = " << n;
      }
    }
  }
}

TEST(PeriodicWitnesses, UnionOfTwoPeriodicOrbits) {
  const LanguageTable t = build_language(
      SeedsSource{Alphabet::numeric(2),
                  {oracle::word("0000000000000000"), oracle::word("0101010101010101")}},
      8);
  const PeriodicWitnessReport p = periodic_witnesses(t, 2);
  EXPECT_TRUE(p.certified());
  std::map<std::string, std::size_t> got;
  for (const auto& w : p.witnesses) got[oracle::str(w.word)] = w.period;
  EXPECT_EQ(got, (std::map<std::string, std::size_t>{{"00", 1}, {"01", 2}, {"10", 2}}));
}

TEST(PeriodicWitnesses, ExtensionsArePeriodicAndBracketedByTheWord) {
  for (const char* name : kSources) {
    const LanguageTable t = load(name, 16);
    for (std::size_t n = 1; n < 8; ++n)
      for (const auto& w : periodic_witnesses(t, n).witnesses) {
        EXPECT_TRUE(oracle::has_period(w.extension, w.period));
        EXPECT_EQ(w.extension.size(), w.period + n);
        EXPECT_TRUE(std::equal(w.word.begin(), w.word.end(), w.extension.end() - n));
      }
  }
}
