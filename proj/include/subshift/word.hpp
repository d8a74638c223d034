#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subshift/error.hpp"

namespace subshift {

using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;
using WordView = std::span<const Symbol>;

inline constexpr std::size_t kMaxAlphabetSize = 256;

/// Ordered set of symbols. Symbol i is displayed as names()[i].
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw InputError("alphabet must be non-empty");
    if (names_.size() > kMaxAlphabetSize)
      throw InputError("alphabet has more than 256 symbols");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw InputError("empty symbol name");
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j])
          throw InputError("duplicate symbol name '" + names_[i] + "'");
    }
  }

  /// Symbols 0..size-1 named by their decimal index.
  static Alphabet numeric(std::size_t size) {
    std::vector<std::string> names(size);
    for (std::size_t i = 0; i < size; ++i) names[i] = std::to_string(i);
    return Alphabet(std::move(names));
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Symbol s) const { return names_.at(s); }

  std::optional<Symbol> find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<Symbol>(i);
    return std::nullopt;
  }

  bool single_char_names() const {
    return std::all_of(names_.begin(), names_.end(),
                       [](const std::string& n) { return n.size() == 1; });
  }

  bool valid(WordView w) const {
    return std::all_of(w.begin(), w.end(),
                       [&](Symbol s) { return s < names_.size(); });
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

/// Renders a word with the alphabet's display names. Multi-character names
/// are separated by spaces.
inline std::string format_word(const Alphabet& alphabet, WordView w) {
  std::string out;
  const bool compact = alphabet.single_char_names();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += alphabet.name(w[i]);
  }
  return out;
}

/// Parses a word written as a string of single-character symbol names.
inline Word parse_word(const Alphabet& alphabet, std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    auto s = alphabet.find(std::string_view(&c, 1));
    if (!s) throw InputError("symbol '" + std::string(1, c) + "' not in alphabet");
    w.push_back(*s);
  }
  return w;
}

inline bool is_subword(WordView needle, WordView haystack) {
  if (needle.size() > haystack.size()) return false;
  return std::search(haystack.begin(), haystack.end(), needle.begin(),
                     needle.end()) != haystack.end();
}

/// True when w(i) == w(i+p) wherever both are defined.
inline bool has_period(WordView w, std::size_t p) {
  if (p == 0) return false;
  for (std::size_t i = 0; i + p < w.size(); ++i)
    if (w[i] != w[i + p]) return false;
  return true;
}

inline bool lex_less(WordView a, WordView b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline bool equal_words(WordView a, WordView b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

inline Word concat(WordView a, WordView b) {
  Word out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline void sort_unique(std::vector<Word>& words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

/// Sorted, deduplicated set of words of one fixed length, stored flat.
/// Membership and index lookup are binary searches.
class WordList {
 public:
  WordList() = default;
  explicit WordList(std::size_t length) : length_(length) {}

  /// Builds from arbitrary views of the given length; sorts and deduplicates.
  static WordList from_views(std::size_t length, std::vector<WordView> views) {
    std::sort(views.begin(), views.end(), lex_less);
    views.erase(std::unique(views.begin(), views.end(), equal_words),
                views.end());
    WordList out(length);
    out.data_.reserve(views.size() * length);
    for (WordView v : views) {
      if (v.size() != length) throw InternalError("word length mismatch in WordList");
      out.data_.insert(out.data_.end(), v.begin(), v.end());
    }
    out.count_ = views.size();
    return out;
  }

  /// Adopts flat storage that is already strictly sorted.
  static WordList from_sorted_flat(std::size_t length, std::vector<Symbol> data) {
    WordList out(length);
    if (length == 0 || data.size() % length != 0)
      throw InternalError("flat word storage has the wrong size");
    out.count_ = data.size() / length;
    out.data_ = std::move(data);
    for (std::size_t i = 1; i < out.count_; ++i)
      if (!lex_less(out[i - 1], out[i])) throw InternalError("flat word storage not sorted");
    return out;
  }

  static WordList from_words(std::size_t length, const std::vector<Word>& words) {
    std::vector<WordView> views(words.begin(), words.end());
    return from_views(length, std::move(views));
  }

  std::size_t length() const noexcept { return length_; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  WordView operator[](std::size_t i) const {
    return WordView(data_.data() + i * length_, length_);
  }

  std::optional<std::size_t> index_of(WordView w) const {
    if (w.size() != length_) return std::nullopt;
    std::size_t lo = 0, hi = count_;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (lex_less((*this)[mid], w))
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo < count_ && equal_words((*this)[lo], w)) return lo;
    return std::nullopt;
  }

  bool contains(WordView w) const { return index_of(w).has_value(); }

  std::vector<Word> to_words() const {
    std::vector<Word> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < count_; ++i) {
      WordView v = (*this)[i];
      out.emplace_back(v.begin(), v.end());
    }
    return out;
  }

  class iterator {
   public:
    using value_type = WordView;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const WordList* list, std::size_t i) : list_(list), i_(i) {}
    WordView operator*() const { return (*list_)[i_]; }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++i_;
      return tmp;
    }
    bool operator==(const iterator& o) const { return i_ == o.i_; }

   private:
    const WordList* list_ = nullptr;
    std::size_t i_ = 0;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, count_); }

  friend bool operator==(const WordList& a, const WordList& b) {
    return a.length_ == b.length_ && a.count_ == b.count_ && a.data_ == b.data_;
  }

 private:
  std::size_t length_ = 0;
  std::size_t count_ = 0;
  std::vector<Symbol> data_;
};

}  // namespace subshift
