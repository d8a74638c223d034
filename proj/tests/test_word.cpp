#include <gtest/gtest.h>

#include <random>

#include "subshift/error.hpp"
#include "subshift/io.hpp"
#include "subshift/word.hpp"

#include "oracles.hpp"

using namespace subshift;

TEST(Alphabet, RejectsEmptyDuplicateAndBlankNames) {
  EXPECT_THROW(Alphabet(std::vector<std::string>{}), InputError);
  EXPECT_THROW(Alphabet({"a", "a"}), InputError);
  EXPECT_THROW(Alphabet({"a", ""}), InputError);
  EXPECT_THROW(Alphabet::numeric(257), InputError);
  EXPECT_NO_THROW(Alphabet::numeric(256));
}

TEST(Alphabet, NumericNamesAndLookup) {
  const Alphabet a = Alphabet::numeric(3);
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ(a.name(2), "2");
  EXPECT_EQ(a.find("1"), Symbol{1});
  EXPECT_FALSE(a.find("3"));
  EXPECT_TRUE(a.single_char_names());
  EXPECT_FALSE(Alphabet::numeric(11).single_char_names());
}

TEST(Word, ParseAndFormatRoundTrip) {
  const Alphabet a({"x", "y"});
  const Word w = parse_word(a, "xyyx");
  EXPECT_EQ(w, (Word{0, 1, 1, 0}));
  EXPECT_EQ(format_word(a, w), "xyyx");
  EXPECT_THROW(parse_word(a, "xz"), InputError);

  const Alphabet long_names({"aa", "b"});
  const Word v = parse_word_text(long_names, "aa b  aa");
  EXPECT_EQ(v, (Word{0, 1, 0}));
  EXPECT_EQ(format_word(long_names, v), "aa b aa");
}

TEST(Word, SubwordAndPeriod) {
  EXPECT_TRUE(is_subword(Word{1, 0}, Word{0, 1, 0}));
  EXPECT_FALSE(is_subword(Word{1, 1}, Word{0, 1, 0}));
  EXPECT_TRUE(has_period(Word{0, 1, 0, 1, 0}, 2));
  EXPECT_FALSE(has_period(Word{0, 1, 1, 0}, 2));
  EXPECT_TRUE(has_period(Word{0}, 5));
}

TEST(WordList, SortedUniqueAndSearchable) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Word> words;
    for (int i = 0; i < 50; ++i) {
      Word w(4);
      for (auto& s : w) s = static_cast<Symbol>(rng() % 3);
      words.push_back(w);
    }
    const WordList list = WordList::from_words(4, words);
    const std::set<Word> expected(words.begin(), words.end());
    ASSERT_EQ(list.size(), expected.size());
    std::size_t i = 0;
    for (const Word& w : expected) {
      EXPECT_TRUE(equal_words(list[i], w));
      EXPECT_EQ(list.index_of(w), i);
      ++i;
    }
    for (const Word& w : oracle::all_strings(3, 4))
      EXPECT_EQ(list.contains(w), expected.count(w) > 0);
  }
}

TEST(WordList, RejectsWrongLengthAndUnsortedInput) {
  EXPECT_THROW(WordList::from_words(2, {Word{0, 1, 0}}), InternalError);
  EXPECT_THROW(WordList::from_sorted_flat(2, {1, 0, 0, 1}), InternalError);
  EXPECT_THROW(WordList::from_sorted_flat(2, {0, 1, 0}), InternalError);
}
