#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "subshift/construction.hpp"
#include "subshift/error.hpp"
#include "subshift/word.hpp"

namespace subshift {

/// Shift of finite type: all words avoiding `forbidden`.
struct SftSource {
  Alphabet alphabet;
  std::vector<Word> forbidden;
};

/// Language of the iterates of `seed` under a substitution; rules[a] is the
/// image of symbol a.
struct SubstitutionSource {
  Alphabet alphabet;
  std::vector<Word> rules;
  Symbol seed = 0;
  std::size_t max_iterations = 64;
  std::size_t max_length = std::size_t{1} << 26;
};

/// Language of all subwords of the given long words.
struct SeedsSource {
  Alphabet alphabet;
  std::vector<Word> seeds;
};

/// Language of the block construction at level K, admitting every pair uv
/// with u, v in A_K.
struct ConstructionSource {
  std::shared_ptr<const ConstructionSpec> spec;
  std::size_t level = 1;
};

using SubshiftSource = std::variant<SftSource, SubstitutionSource, SeedsSource, ConstructionSource>;

/// Finite truncation of a language: levels 1..depth, each a sorted word set.
/// Immutable after construction.
class LanguageTable {
 public:
  LanguageTable(Alphabet alphabet, std::vector<WordList> levels)
      : alphabet_(std::move(alphabet)), levels_(std::move(levels)) {
    for (std::size_t n = 0; n < levels_.size(); ++n)
      if (levels_[n].length() != n + 1) throw InternalError("level length mismatch");
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t depth() const noexcept { return levels_.size(); }

  const WordList& level(std::size_t n) const {
    if (n < 1 || n > depth())
      throw DepthError("level " + std::to_string(n) + " outside table depth " +
                       std::to_string(depth()));
    return levels_[n - 1];
  }

  std::size_t complexity(std::size_t n) const { return level(n).size(); }

  /// Membership for words of length 1..depth.
  bool contains(WordView w) const {
    if (w.empty() || w.size() > depth())
      throw DepthError("membership query of length " + std::to_string(w.size()) +
                       " outside table depth " + std::to_string(depth()));
    return levels_[w.size() - 1].contains(w);
  }

  /// Errors on an empty level; downstream reports would otherwise be vacuous.
  void require_nonempty() const {
    for (std::size_t n = 1; n <= depth(); ++n)
      if (level(n).empty())
        throw InputError("language is empty at length " + std::to_string(n));
  }

 private:
  Alphabet alphabet_;
  std::vector<WordList> levels_;
};

/// First violated table invariant, if any: factor-closedness, or a word
/// below the top level without both a right and a left extension.
inline std::optional<std::string> check_table_invariants(const LanguageTable& table) {
  for (std::size_t n = 1; n < table.depth(); ++n) {
    const WordList& lower = table.level(n);
    const WordList& upper = table.level(n + 1);
    std::vector<bool> right(lower.size(), false), left(lower.size(), false);
    for (WordView w : upper) {
      auto p = lower.index_of(w.first(n));
      auto s = lower.index_of(w.last(n));
      if (!p || !s)
        return "level " + std::to_string(n + 1) + " word " +
               format_word(table.alphabet(), w) + " has a factor missing from level " +
               std::to_string(n);
      right[*p] = true;
      left[*s] = true;
    }
    for (std::size_t i = 0; i < lower.size(); ++i) {
      if (!right[i])
        return "word " + format_word(table.alphabet(), lower[i]) + " has no right extension";
      if (!left[i])
        return "word " + format_word(table.alphabet(), lower[i]) + " has no left extension";
    }
  }
  return std::nullopt;
}

namespace detail {

inline void check_words(const Alphabet& alphabet, const std::vector<Word>& words,
                        const char* what) {
  for (const Word& w : words)
    if (!alphabet.valid(w)) throw InputError(std::string(what) + " uses a symbol outside the alphabet");
}

inline std::vector<WordList> sft_levels(const SftSource& src, std::size_t depth) {
  check_words(src.alphabet, src.forbidden, "forbidden word");
  for (const Word& f : src.forbidden)
    if (f.empty()) throw InputError("forbidden words must be non-empty");
  const std::size_t k = src.alphabet.size();

  auto admissible_suffixes = [&](WordView w) {
    for (const Word& f : src.forbidden)
      if (f.size() <= w.size() && equal_words(w.last(f.size()), f)) return false;
    return true;
  };

  std::vector<WordList> levels;
  std::vector<Symbol> flat;
  for (std::size_t a = 0; a < k; ++a) {
    const Symbol s = static_cast<Symbol>(a);
    if (admissible_suffixes(WordView(&s, 1))) flat.push_back(s);
  }
  levels.push_back(WordList::from_sorted_flat(1, std::move(flat)));

  Word candidate;
  for (std::size_t n = 1; n < depth; ++n) {
    const WordList& prev = levels.back();
    std::vector<Symbol> next;
    for (WordView w : prev) {
      candidate.assign(w.begin(), w.end());
      candidate.push_back(0);
      for (std::size_t a = 0; a < k; ++a) {
        candidate.back() = static_cast<Symbol>(a);
        if (admissible_suffixes(candidate)) next.insert(next.end(), candidate.begin(), candidate.end());
      }
    }
    levels.push_back(WordList::from_sorted_flat(n + 1, std::move(next)));
  }
  return levels;
}

/// Levels 1..depth of all subwords of `seeds`. Seeds shorter than depth
/// contribute to the levels they reach.
inline std::vector<WordList> subword_levels(const std::vector<Word>& seeds, std::size_t depth) {
  std::vector<WordList> levels(depth);
  std::vector<WordView> views;
  for (const Word& s : seeds)
    for (std::size_t i = 0; i + depth <= s.size(); ++i)
      views.push_back(WordView(s).subspan(i, depth));
  levels[depth - 1] = WordList::from_views(depth, std::move(views));

  // A length-n subword is a prefix of a length-(n+1) subword unless it ends
  // its seed.
  for (std::size_t n = depth - 1; n >= 1; --n) {
    std::vector<WordView> shorter;
    const WordList& upper = levels[n];
    shorter.reserve(upper.size() + seeds.size());
    for (WordView w : upper) shorter.push_back(w.first(n));
    for (const Word& s : seeds)
      if (s.size() >= n) shorter.push_back(WordView(s).last(n));
    levels[n - 1] = WordList::from_views(n, std::move(shorter));
  }
  return levels;
}

inline Word substitute(const SubstitutionSource& src, const Word& w) {
  Word out;
  for (Symbol s : w) out.insert(out.end(), src.rules[s].begin(), src.rules[s].end());
  return out;
}

inline std::vector<WordList> substitution_levels(const SubstitutionSource& src,
                                                 std::size_t depth) {
  if (src.rules.size() != src.alphabet.size())
    throw InputError("substitution must have exactly one rule per symbol");
  check_words(src.alphabet, src.rules, "substitution image");
  for (const Word& r : src.rules)
    if (r.empty()) throw InputError("substitution images must be non-empty");
  if (src.seed >= src.alphabet.size()) throw InputError("seed symbol outside the alphabet");

  Word current{src.seed};
  std::optional<std::vector<WordList>> previous;
  for (std::size_t iter = 0; iter < src.max_iterations; ++iter) {
    Word next = substitute(src, current);
    if (next.size() > src.max_length)
      throw DepthError("insufficient generator depth: substitution iterate exceeded " +
                       std::to_string(src.max_length) + " symbols before stabilizing");
    if (next.size() >= depth) {
      std::vector<WordList> levels = subword_levels({next}, depth);
      if (previous && *previous == levels) return levels;
      previous = std::move(levels);
    }
    current = std::move(next);
  }
  throw DepthError("insufficient generator depth: substitution did not stabilize within " +
                   std::to_string(src.max_iterations) + " iterations");
}

}  // namespace detail

/// Builds levels 1..depth of the language generated by `source`.
/// Generator-backed sources (substitution, seeds, construction) must certify
/// every level: tables failing the extension invariants raise DepthError.
/// SFT levels are the locally admissible words.
inline LanguageTable build_language(const SubshiftSource& source, std::size_t depth) {
  if (depth < 1) throw InputError("depth must be at least 1");
  struct Builder {
    std::size_t depth;

    LanguageTable operator()(const SftSource& src) const {
      return LanguageTable(src.alphabet, detail::sft_levels(src, depth));
    }
    LanguageTable operator()(const SubstitutionSource& src) const {
      return certified(LanguageTable(src.alphabet, detail::substitution_levels(src, depth)));
    }
    LanguageTable operator()(const SeedsSource& src) const {
      detail::check_words(src.alphabet, src.seeds, "seed");
      if (src.seeds.empty()) throw InputError("seed list is empty");
      for (const Word& s : src.seeds)
        if (s.size() < depth)
          throw DepthError("insufficient generator depth: seed of length " +
                           std::to_string(s.size()) + " shorter than depth " +
                           std::to_string(depth));
      return certified(LanguageTable(src.alphabet, detail::subword_levels(src.seeds, depth)));
    }
    LanguageTable operator()(const ConstructionSource& src) const {
      if (!src.spec) throw InputError("construction source has no spec");
      if (src.level < 1) throw InputError("construction level must be at least 1");
      auto seeds = construction_seeds(*src.spec, src.level, depth);
      return certified(LanguageTable(Alphabet::numeric(src.spec->level(1).order),
                                     detail::subword_levels(seeds, depth)));
    }

    static LanguageTable certified(LanguageTable table) {
      if (auto problem = check_table_invariants(table))
        throw DepthError("insufficient generator depth: " + *problem);
      return table;
    }
  };
  return std::visit(Builder{depth}, source);
}

/// c_n for n = 1..depth and the first differences c_{n+1} - c_n.
struct ComplexityProfile {
  std::vector<std::uint64_t> c;     // c[n-1] = c_n
  std::vector<std::int64_t> diff;   // diff[n-1] = c_{n+1} - c_n

  std::size_t depth() const noexcept { return c.size(); }
  std::uint64_t at(std::size_t n) const { return c.at(n - 1); }
};

inline ComplexityProfile complexity_profile(const LanguageTable& table) {
  table.require_nonempty();
  ComplexityProfile p;
  for (std::size_t n = 1; n <= table.depth(); ++n) p.c.push_back(table.complexity(n));
  for (std::size_t n = 1; n < table.depth(); ++n)
    p.diff.push_back(static_cast<std::int64_t>(p.c[n]) - static_cast<std::int64_t>(p.c[n - 1]));
  return p;
}

enum class Side { left, right };

inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

/// RS_n or LS_n: words of length n with at least two one-symbol extensions
/// on the given side. Sorted.
inline std::vector<Word> special_words(const LanguageTable& table, std::size_t n, Side side) {
  if (n < 1 || n + 1 > table.depth())
    throw DepthError("special words at level " + std::to_string(n) + " need depth >= " +
                     std::to_string(n + 1) + ", table has " + std::to_string(table.depth()));
  table.require_nonempty();
  const WordList& upper = table.level(n + 1);
  std::vector<WordView> cores;
  cores.reserve(upper.size());
  for (WordView w : upper) cores.push_back(side == Side::right ? w.first(n) : w.last(n));
  if (side == Side::left) std::sort(cores.begin(), cores.end(), lex_less);

  std::vector<Word> out;
  for (std::size_t i = 0; i < cores.size();) {
    std::size_t j = i + 1;
    while (j < cores.size() && equal_words(cores[i], cores[j])) ++j;
    if (j - i >= 2) out.emplace_back(cores[i].begin(), cores[i].end());
    i = j;
  }
  return out;
}

struct SpecialBoundRow {
  std::size_t n = 0;
  std::size_t right_special = 0;
  std::size_t left_special = 0;
  std::uint64_t c_n = 0;
  std::uint64_t c_next = 0;
  std::int64_t diff = 0;
  bool ok = false;
};

struct SpecialBoundReport {
  std::vector<SpecialBoundRow> rows;
  bool pass = true;
};

/// Checks |RS_n|, |LS_n| <= c_{n+1} - c_n for n = 1..n_max.
inline SpecialBoundReport verify_special_bound(const LanguageTable& table, std::size_t n_max) {
  if (n_max + 1 > table.depth())
    throw DepthError("special bound up to level " + std::to_string(n_max) +
                     " needs depth >= " + std::to_string(n_max + 1));
  SpecialBoundReport report;
  for (std::size_t n = 1; n <= n_max; ++n) {
    SpecialBoundRow row;
    row.n = n;
    row.right_special = special_words(table, n, Side::right).size();
    row.left_special = special_words(table, n, Side::left).size();
    row.c_n = table.complexity(n);
    row.c_next = table.complexity(n + 1);
    row.diff = static_cast<std::int64_t>(row.c_next) - static_cast<std::int64_t>(row.c_n);
    row.ok = static_cast<std::int64_t>(row.right_special) <= row.diff &&
             static_cast<std::int64_t>(row.left_special) <= row.diff;
    report.pass = report.pass && row.ok;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace subshift
