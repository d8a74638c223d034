#pragma once

// n-branch words: maximal words that start (end) with a right- (left-)special
// word of length n, contain no other special word of length n, and repeat no
// length-n subword. Words covered by none of them lie on isolated periodic
// points; periodic_witnesses certifies that at finite depth.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "subshift/error.hpp"
#include "subshift/language.hpp"
#include "subshift/word.hpp"

namespace subshift {

struct BranchWordSet {
  std::size_t level = 0;
  std::vector<Word> right;
  std::vector<Word> left;
  // Maximality is only certified relative to the table depth.
  bool depth_limited = false;

  std::size_t count() const noexcept { return right.size() + left.size(); }

  std::size_t max_length() const {
    std::size_t m = 0;
    for (const Word& w : right) m = std::max(m, w.size());
    for (const Word& w : left) m = std::max(m, w.size());
    return m;
  }
};

namespace detail {

inline void require_branch_depth(const LanguageTable& table, std::size_t n) {
  if (n < 1 || n + 1 > table.depth())
    throw DepthError("branch words at level " + std::to_string(n) + " need depth >= " +
                     std::to_string(n + 1) + ", table has " + std::to_string(table.depth()));
  table.require_nonempty();
}

inline Word extend_on(Side side, WordView w, Symbol a) {
  Word out(w.size() + 1);
  const std::size_t shift = side == Side::left ? 1 : 0;
  std::copy(w.begin(), w.end(), out.begin() + static_cast<std::ptrdiff_t>(shift));
  out[side == Side::left ? 0 : w.size()] = a;
  return out;
}

// The length-n subword created by the most recent extension.
inline WordView newest_subword(Side side, const Word& w, std::size_t n) {
  return side == Side::right ? WordView(w).last(n) : WordView(w).first(n);
}

inline std::vector<Word> branch_side(const LanguageTable& table, std::size_t n, Side side,
                                     bool& hit_depth) {
  const std::vector<Word> special_list = special_words(table, n, side);
  const WordList special = WordList::from_words(n, special_list);
  const std::size_t k = table.alphabet().size();
  std::vector<Word> out;
  for (const Word& w : special_list) {
    bool any = false;
    for (std::size_t a = 0; a < k; ++a) {
      Word current = extend_on(side, w, static_cast<Symbol>(a));
      if (!table.contains(current)) continue;
      WordView end = newest_subword(side, current, n);
      if (special.contains(end) || equal_words(end, w)) continue;
      any = true;
      // Past the first step the newest subword is never special, so at most
      // one extension is admitted and growth is forced.
      std::set<Word> seen{w, Word(end.begin(), end.end())};
      for (;;) {
        if (current.size() >= table.depth()) {
          hit_depth = true;
          break;
        }
        std::vector<Word> options;
        for (std::size_t b = 0; b < k; ++b) {
          Word ext = extend_on(side, current, static_cast<Symbol>(b));
          if (!table.contains(ext)) continue;
          WordView e = newest_subword(side, ext, n);
          if (special.contains(e) || seen.count(Word(e.begin(), e.end()))) continue;
          options.push_back(std::move(ext));
        }
        if (options.empty()) break;
        if (options.size() > 1) throw InternalError("branch word continuation is not unique");
        WordView e = newest_subword(side, options.front(), n);
        seen.emplace(e.begin(), e.end());
        current = std::move(options.front());
      }
      out.push_back(std::move(current));
    }
    // No admissible first step: the special word itself is maximal.
    if (!any) out.push_back(w);
  }
  sort_unique(out);
  return out;
}

}  // namespace detail

/// n-right and n-left branch words of the table, sorted.
inline BranchWordSet branch_words(const LanguageTable& table, std::size_t n) {
  detail::require_branch_depth(table, n);
  BranchWordSet set;
  set.level = n;
  bool hit_depth = false;
  set.right = detail::branch_side(table, n, Side::right, hit_depth);
  set.left = detail::branch_side(table, n, Side::left, hit_depth);
  set.depth_limited = hit_depth || table.depth() < n + table.complexity(n);
  return set;
}

struct BranchFactsReport {
  std::size_t level = 0;
  std::size_t right_count = 0;
  std::size_t left_count = 0;
  std::uint64_t count_bound = 0;   // 2|A|(c_{n+1} - c_n)
  std::size_t max_length = 0;
  std::uint64_t length_bound = 0;  // n + c_n, strict
  bool count_ok = false;
  bool length_ok = false;
  bool depth_limited = false;
  bool pass = false;
};

/// Count and length bounds on branch words.
inline BranchFactsReport verify_branch_facts(const LanguageTable& table, std::size_t n) {
  const BranchWordSet set = branch_words(table, n);
  BranchFactsReport r;
  r.level = n;
  r.right_count = set.right.size();
  r.left_count = set.left.size();
  const std::int64_t diff = static_cast<std::int64_t>(table.complexity(n + 1)) -
                            static_cast<std::int64_t>(table.complexity(n));
  if (diff < 0) throw InputError("complexity decreases at level " + std::to_string(n));
  r.count_bound = 2 * table.alphabet().size() * static_cast<std::uint64_t>(diff);
  r.max_length = set.max_length();
  r.length_bound = n + table.complexity(n);
  r.count_ok = set.count() <= r.count_bound;
  r.length_ok = set.count() == 0 || r.max_length < r.length_bound;
  r.depth_limited = set.depth_limited;
  r.pass = r.count_ok && r.length_ok;
  return r;
}

struct PeriodicWitness {
  Word word;
  std::size_t period = 0;
  Word extension;  // x[0, m): begins and ends with `word`, m = period + n

  /// One period of the periodic point through `word`.
  WordView fundamental_block() const { return WordView(extension).first(period); }
};

struct WitnessFinding {
  Word word;
  std::string reason;
};

struct PeriodicWitnessReport {
  std::size_t level = 0;
  std::vector<PeriodicWitness> witnesses;
  std::vector<WitnessFinding> findings;
  bool depth_limited = false;

  bool certified() const noexcept { return findings.empty(); }
};

/// Words of L_n lying in no n-branch word, each certified to force a
/// periodic continuation within the table.
inline PeriodicWitnessReport periodic_witnesses(const LanguageTable& table, std::size_t n) {
  const BranchWordSet branches = branch_words(table, n);
  const WordList& level = table.level(n);
  const WordList right_special = WordList::from_words(n, special_words(table, n, Side::right));
  const WordList left_special = WordList::from_words(n, special_words(table, n, Side::left));
  const std::size_t k = table.alphabet().size();
  const std::size_t depth = table.depth();

  std::vector<bool> covered(level.size(), false);
  for (const auto* side : {&branches.right, &branches.left})
    for (const Word& b : *side)
      for (std::size_t i = 0; i + n <= b.size(); ++i)
        if (auto idx = level.index_of(WordView(b).subspan(i, n))) covered[*idx] = true;

  PeriodicWitnessReport report;
  report.level = n;
  report.depth_limited = branches.depth_limited;

  for (std::size_t idx = 0; idx < level.size(); ++idx) {
    if (covered[idx]) continue;
    WordView w = level[idx];
    Word x(w.begin(), w.end());
    std::set<Word> seen{x};
    std::string failure;
    std::size_t repeat_at = 0;
    bool repeated = false;
    while (!repeated && failure.empty()) {
      if (x.size() >= depth) {
        failure = "no repeated subword of length " + std::to_string(n) + " within depth " +
                  std::to_string(depth);
        report.depth_limited = true;
        break;
      }
      std::vector<Symbol> next;
      Word ext = x;
      ext.push_back(0);
      for (std::size_t a = 0; a < k; ++a) {
        ext.back() = static_cast<Symbol>(a);
        if (table.contains(ext)) next.push_back(static_cast<Symbol>(a));
      }
      if (next.empty()) {
        failure = "extension dead-ends at length " + std::to_string(x.size());
        break;
      }
      if (next.size() > 1) {
        failure = "continuation branches at length " + std::to_string(x.size());
        break;
      }
      x.push_back(next.front());
      Word tail(x.end() - static_cast<std::ptrdiff_t>(n), x.end());
      if (seen.count(tail)) {
        repeated = true;
        for (std::size_t i = 0; i + n < x.size(); ++i)
          if (equal_words(WordView(x).subspan(i, n), tail)) {
            repeat_at = i;
            break;
          }
      } else {
        seen.insert(std::move(tail));
      }
    }
    if (failure.empty() && repeat_at != 0)
      failure = "first repeated subword is not the starting word (repeat at offset " +
                std::to_string(repeat_at) + ")";
    if (failure.empty()) {
      for (std::size_t i = 0; i + n <= x.size(); ++i) {
        WordView sub = WordView(x).subspan(i, n);
        if (right_special.contains(sub) || left_special.contains(sub)) {
          failure = "extension contains a special word at offset " + std::to_string(i);
          break;
        }
      }
    }
    const std::size_t period = x.size() - n;
    if (failure.empty()) {
      if (x.size() > depth) {
        failure = "extension longer than table depth";
        report.depth_limited = true;
      } else {
        for (WordView y : table.level(depth))
          if (is_subword(x, y) && !has_period(y, period)) {
            failure = "continuation " + format_word(table.alphabet(), y) +
                      " is not periodic with period " + std::to_string(period);
            break;
          }
      }
    }
    if (failure.empty())
      report.witnesses.push_back({Word(w.begin(), w.end()), period, std::move(x)});
    else
      report.findings.push_back({Word(w.begin(), w.end()), std::move(failure)});
  }
  return report;
}

}  // namespace subshift
