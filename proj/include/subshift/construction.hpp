#pragma once

// Block-concatenation construction realizing a finite chain of groups
// H_1 < H_2 < ... < H_K as automorphisms permuting nested word families.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "subshift/error.hpp"
#include "subshift/group.hpp"
#include "subshift/word.hpp"

namespace subshift {

/// g = embed(element) * r_{coset}; coset is 1-based as in r_1 = id.
struct CosetDecomposition {
  std::size_t element = 0;
  std::size_t coset = 1;
};

/// Derived data for one level k of the construction.
struct ConstructionLevel {
  std::size_t order = 0;                 // |H_k|
  std::uint64_t block_length = 1;        // n_k
  std::uint64_t multiplicity = 0;        // b_k, 0 at level 1
  std::size_t index = 0;                 // q_k = |H_k| / |H_{k-1}|, 0 at level 1
  std::uint64_t repetition_threshold = 0;  // d_k = 2 b_k q_k, 0 at level 1
  std::vector<std::size_t> coset_reps;   // r_1 = 0, ..., r_q, indices into H_k
  std::vector<CosetDecomposition> decomposition;  // per element of H_k
};

struct ConstructionSpec {
  GroupChain chain;
  std::vector<ConstructionLevel> levels;  // levels[k-1] describes level k

  std::size_t top_level() const noexcept { return levels.size(); }

  const ConstructionLevel& level(std::size_t k) const {
    if (k < 1 || k > levels.size())
      throw InputError("construction level " + std::to_string(k) + " outside [1, " +
                       std::to_string(levels.size()) + "]");
    return levels[k - 1];
  }

  const FiniteGroup& group(std::size_t k) const {
    level(k);
    return chain.groups[k - 1];
  }

  /// Image of h in H_k under the chain embedding into H_m, m >= k.
  std::size_t embed(std::size_t h, std::size_t k, std::size_t m) const {
    for (std::size_t j = k; j < m; ++j) h = chain.embeddings[j - 1][h];
    return h;
  }
};

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw InputError("block length overflows 64 bits");
  return a * b;
}

}  // namespace detail

/// Computes q_k, n_k, d_k and coset representatives for every level.
/// `b` holds b_2, ..., b_K.
inline ConstructionSpec derive_spec(GroupChain chain, const std::vector<std::uint64_t>& b) {
  const ChainValidation validation = validate_chain(chain);
  if (!validation.pass) {
    std::string msg = "invalid group chain";
    for (const auto& v : validation.violations) msg += "; " + v.check + ": " + v.detail;
    throw InputError(msg);
  }
  if (b.size() + 1 != chain.levels())
    throw InputError("expected " + std::to_string(chain.levels() - 1) +
                     " multiplicities b_2..b_K, got " + std::to_string(b.size()));
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] < 2)
      throw InputError("b_" + std::to_string(i + 2) + " = " + std::to_string(b[i]) +
                       " must be at least 2");

  ConstructionSpec spec;
  spec.chain = std::move(chain);
  const auto& groups = spec.chain.groups;

  ConstructionLevel first;
  first.order = groups[0].order();
  first.block_length = 1;
  spec.levels.push_back(std::move(first));

  for (std::size_t k = 1; k < groups.size(); ++k) {
    const FiniteGroup& lower = groups[k - 1];
    const FiniteGroup& upper = groups[k];
    const auto& emb = spec.chain.embeddings[k - 1];
    ConstructionLevel lvl;
    lvl.order = upper.order();
    lvl.multiplicity = b[k - 1];
    lvl.decomposition.assign(upper.order(), {});

    // Right cosets H_{k} g, scanned in index order; least uncovered element
    // becomes the next representative.
    std::vector<bool> covered(upper.order(), false);
    for (std::size_t g = 0; g < upper.order(); ++g) {
      if (covered[g]) continue;
      lvl.coset_reps.push_back(g);
      const std::size_t coset = lvl.coset_reps.size();
      for (std::size_t h = 0; h < lower.order(); ++h) {
        const std::size_t member = upper.mul(emb[h], g);
        if (covered[member])
          throw InternalError("right cosets overlap at element " + std::to_string(member));
        covered[member] = true;
        lvl.decomposition[member] = {h, coset};
      }
    }
    lvl.index = lvl.coset_reps.size();
    if (lvl.index * lower.order() != upper.order())
      throw InternalError("coset count does not divide the group order");

    const std::uint64_t lower_order = lower.order();
    const std::uint64_t per_block =
        2 * lower_order * lower_order + 5 * static_cast<std::uint64_t>(lvl.index);
    lvl.block_length = detail::checked_mul(
        detail::checked_mul(lvl.multiplicity, spec.levels.back().block_length), per_block);
    lvl.repetition_threshold = 2 * lvl.multiplicity * lvl.index;
    spec.levels.push_back(std::move(lvl));
  }
  return spec;
}

struct BlockRun {
  std::size_t element = 0;
  std::uint64_t count = 0;

  friend bool operator==(const BlockRun&, const BlockRun&) = default;
};

/// The words w_g^(k), g in H_k. Above level 1 each word is stored as runs of
/// A_{k-1} blocks and expanded to base symbols on demand.
struct AkWordFamily {
  std::size_t level = 1;
  std::uint64_t length = 1;
  std::size_t order = 0;
  std::vector<std::vector<BlockRun>> runs;
  std::shared_ptr<const AkWordFamily> lower;

  /// Block sequence of w_g over A_{level-1}.
  std::vector<std::size_t> blocks(std::size_t g) const {
    std::vector<std::size_t> out;
    for (const BlockRun& r : runs.at(g)) out.insert(out.end(), r.count, r.element);
    return out;
  }

  Word word(std::size_t g) const {
    if (level == 1) return Word{static_cast<Symbol>(g)};
    Word out;
    out.reserve(length);
    std::vector<Word> cache(lower->order);
    for (const BlockRun& r : runs.at(g)) {
      if (cache[r.element].empty()) cache[r.element] = lower->word(r.element);
      for (std::uint64_t c = 0; c < r.count; ++c)
        out.insert(out.end(), cache[r.element].begin(), cache[r.element].end());
    }
    return out;
  }

  std::vector<Word> words() const {
    std::vector<Word> out;
    out.reserve(order);
    for (std::size_t g = 0; g < order; ++g) out.push_back(word(g));
    return out;
  }
};

namespace detail {

inline void append_run(std::vector<BlockRun>& runs, std::size_t element, std::uint64_t count) {
  if (count == 0) return;
  if (!runs.empty() && runs.back().element == element)
    runs.back().count += count;
  else
    runs.push_back({element, count});
}

inline std::shared_ptr<const AkWordFamily> build_family(const ConstructionSpec& spec,
                                                        std::size_t k) {
  if (k == 1) {
    auto fam = std::make_shared<AkWordFamily>();
    fam->level = 1;
    fam->length = 1;
    fam->order = spec.level(1).order;
    fam->runs.assign(fam->order, {});
    return fam;
  }
  auto lower = build_family(spec, k - 1);
  const ConstructionLevel& lvl = spec.level(k);
  const FiniteGroup& sub = spec.group(k - 1);
  const std::size_t m = sub.order();
  const std::uint64_t b = lvl.multiplicity;
  const std::uint64_t q = lvl.index;

  auto fam = std::make_shared<AkWordFamily>();
  fam->level = k;
  fam->length = lvl.block_length;
  fam->order = lvl.order;
  fam->lower = lower;
  fam->runs.resize(lvl.order);
  for (std::size_t g = 0; g < lvl.order; ++g) {
    const auto [prefix, coset] = lvl.decomposition[g];
    // h_j is element j-1; block for h_j is prefix * h_j in H_{k-1}.
    auto block = [&](std::size_t j) { return sub.mul(prefix, j - 1); };
    auto& runs = fam->runs[g];
    append_run(runs, block(2), 2 * b * q);
    for (std::size_t a = 1; a <= m; ++a)
      for (std::size_t c = 1; c <= m; ++c) {
        append_run(runs, block(a), b);
        append_run(runs, block(c), b);
      }
    append_run(runs, block(1), coset * b);
    append_run(runs, block(2), b * (3 * q - coset));

    std::uint64_t blocks = 0;
    for (const BlockRun& r : runs) blocks += r.count;
    if (blocks * lower->length != fam->length)
      throw InternalError("generated word length disagrees with n_" + std::to_string(k));
  }
  return fam;
}

}  // namespace detail

/// Generates A_k for 1 <= k <= K.
inline AkWordFamily build_Ak(const ConstructionSpec& spec, std::size_t k) {
  spec.level(k);
  return *detail::build_family(spec, k);
}

/// Maps base-symbol words of length n_k back to the element g of w_g^(k).
class BlockDecoder {
 public:
  explicit BlockDecoder(const AkWordFamily& family)
      : length_(static_cast<std::size_t>(family.length)) {
    std::vector<Word> words = family.words();
    list_ = WordList::from_words(length_, words);
    if (list_.size() != words.size())
      throw InternalError("A_" + std::to_string(family.level) + " words are not distinct");
    element_of_.resize(words.size());
    for (std::size_t g = 0; g < words.size(); ++g) element_of_[*list_.index_of(words[g])] = g;
  }

  std::size_t block_length() const noexcept { return length_; }

  std::optional<std::size_t> element(WordView block) const {
    auto idx = list_.index_of(block);
    if (!idx) return std::nullopt;
    return element_of_[*idx];
  }

  /// Splits w into aligned blocks. Throws DomainError naming the first offset
  /// that is not an A_k word.
  std::vector<std::size_t> decode(WordView w) const {
    if (w.size() % length_ != 0)
      throw DomainError("word of length " + std::to_string(w.size()) +
                        " is not a multiple of block length " + std::to_string(length_));
    std::vector<std::size_t> out;
    out.reserve(w.size() / length_);
    for (std::size_t off = 0; off < w.size(); off += length_) {
      auto e = element(w.subspan(off, length_));
      if (!e)
        throw DomainError("no block word at offset " + std::to_string(off) +
                          " (block length " + std::to_string(length_) + ")");
      out.push_back(*e);
    }
    return out;
  }

 private:
  std::size_t length_;
  WordList list_;
  std::vector<std::size_t> element_of_;
};

/// pi_{k,h}: replaces every aligned block w_g^(k) of w by w_{hg}^(k).
inline Word pi_apply(const FiniteGroup& group, const AkWordFamily& family,
                     const BlockDecoder& decoder, std::size_t h, WordView w) {
  if (h >= group.order())
    throw InputError("element " + std::to_string(h) + " not in H_" +
                     std::to_string(family.level));
  std::vector<Word> images(family.order);
  Word out;
  out.reserve(w.size());
  for (std::size_t g : decoder.decode(w)) {
    const std::size_t target = group.mul(h, g);
    if (images[target].empty()) images[target] = family.word(target);
    out.insert(out.end(), images[target].begin(), images[target].end());
  }
  return out;
}

inline Word pi_apply(const ConstructionSpec& spec, std::size_t k, std::size_t h, WordView w) {
  const AkWordFamily family = build_Ak(spec, k);
  return pi_apply(spec.group(k), family, BlockDecoder(family), h, w);
}

/// Words whose length-<=depth subwords are exactly those of all
/// concatenations uv with u, v in A_K: every A_K word, plus the junction
/// region of each ordered pair.
inline std::vector<Word> construction_seeds(const ConstructionSpec& spec, std::size_t level,
                                            std::size_t depth) {
  const AkWordFamily family = build_Ak(spec, level);
  if (depth > family.length)
    throw DepthError("insufficient generator depth: A_" + std::to_string(level) +
                     " words have length " + std::to_string(family.length) +
                     " < requested depth " + std::to_string(depth));
  std::vector<Word> words = family.words();
  std::vector<Word> seeds = words;
  const std::size_t margin = depth > 0 ? depth - 1 : 0;
  for (const Word& u : words)
    for (const Word& v : words) {
      Word junction(u.end() - static_cast<std::ptrdiff_t>(margin), u.end());
      junction.insert(junction.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(margin));
      seeds.push_back(std::move(junction));
    }
  return seeds;
}

}  // namespace subshift
