#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "subshift/error.hpp"
#include "subshift/language.hpp"
#include "subshift/word.hpp"

namespace subshift {

/// Local rule of range r: each word of the domain (length 2r+1) maps to the
/// symbol at its centre position in the image.
class BlockMapCode {
 public:
  BlockMapCode(std::size_t range, std::shared_ptr<const WordList> domain,
               std::vector<Symbol> image)
      : range_(range), domain_(std::move(domain)), image_(std::move(image)) {
    if (!domain_) throw InputError("block code needs a domain");
    if (domain_->length() != 2 * range_ + 1)
      throw InputError("domain word length " + std::to_string(domain_->length()) +
                       " does not match range " + std::to_string(range_));
    if (image_.size() != domain_->size())
      throw InputError("block code table is not total on its domain");
  }

  std::size_t range() const noexcept { return range_; }
  std::size_t window() const noexcept { return 2 * range_ + 1; }
  const WordList& domain() const noexcept { return *domain_; }
  const std::shared_ptr<const WordList>& shared_domain() const noexcept { return domain_; }
  const std::vector<Symbol>& image() const noexcept { return image_; }

  std::optional<Symbol> lookup(WordView window) const {
    auto idx = domain_->index_of(window);
    if (!idx) return std::nullopt;
    return image_[*idx];
  }

  friend bool operator==(const BlockMapCode& a, const BlockMapCode& b) {
    return a.range_ == b.range_ && *a.domain_ == *b.domain_ && a.image_ == b.image_;
  }

  /// Canonical order: by range, then by table entries in domain order.
  friend std::strong_ordering operator<=>(const BlockMapCode& a, const BlockMapCode& b) {
    if (auto c = a.range_ <=> b.range_; c != 0) return c;
    return a.image_ <=> b.image_;
  }

 private:
  std::size_t range_;
  std::shared_ptr<const WordList> domain_;
  std::vector<Symbol> image_;
};

inline std::shared_ptr<const WordList> code_domain(const LanguageTable& table, std::size_t range) {
  return std::make_shared<const WordList>(table.level(2 * range + 1));
}

inline BlockMapCode make_code(std::size_t range, std::shared_ptr<const WordList> domain,
                              const std::function<Symbol(WordView)>& rule) {
  std::vector<Symbol> image;
  image.reserve(domain->size());
  for (WordView w : *domain) image.push_back(rule(w));
  return BlockMapCode(range, std::move(domain), std::move(image));
}

/// The identity map realized at the given range.
inline BlockMapCode identity_code(std::shared_ptr<const WordList> domain) {
  const std::size_t r = domain->length() / 2;
  return make_code(r, std::move(domain), [r](WordView w) { return w[r]; });
}

/// sigma^m realized at range r >= |m|: window x[-r..r] maps to x[m].
inline BlockMapCode shift_code(std::shared_ptr<const WordList> domain, long m = 1) {
  const long r = static_cast<long>(domain->length() / 2);
  if (m > r || -m > r) throw InputError("shift power exceeds code range");
  return make_code(static_cast<std::size_t>(r), std::move(domain),
                   [r, m](WordView w) { return w[static_cast<std::size_t>(r + m)]; });
}

/// Range-0 code relabelling symbol s as relabel[s].
inline BlockMapCode symbol_map_code(std::shared_ptr<const WordList> domain,
                                    const std::vector<Symbol>& relabel) {
  if (domain->length() != 1) throw InputError("symbol map codes have range 0");
  return make_code(0, std::move(domain), [&](WordView w) { return relabel.at(w[0]); });
}

/// Windowed application: result(i) = code(w[i, i + 2r]).
inline Word apply_code(const BlockMapCode& code, WordView w) {
  if (w.size() < code.window())
    throw DomainError("word of length " + std::to_string(w.size()) +
                      " shorter than code window " + std::to_string(code.window()));
  Word out(w.size() - 2 * code.range());
  for (std::size_t i = 0; i < out.size(); ++i) {
    WordView window = w.subspan(i, code.window());
    auto s = code.lookup(window);
    if (!s) {
      std::string text;
      for (Symbol c : window) text += std::to_string(c) + (window.size() > 1 ? " " : "");
      throw DomainError("window [" + text + "] at offset " + std::to_string(i) +
                        " outside code domain");
    }
    out[i] = *s;
  }
  return out;
}

/// outer after inner, with range r_outer + r_inner. The domain is every word
/// whose inner windows lie in inner's domain and whose inner image lies in
/// outer's domain.
inline BlockMapCode compose_codes(const BlockMapCode& outer, const BlockMapCode& inner) {
  const std::size_t range = outer.range() + inner.range();
  const std::size_t length = 2 * range + 1;
  Symbol max_symbol = 0;
  for (WordView w : inner.domain())
    for (Symbol s : w) max_symbol = std::max(max_symbol, s);

  // Extend inner's domain words right until they reach the composite length.
  std::vector<Word> frontier = inner.domain().to_words();
  for (std::size_t len = inner.window(); len < length; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (unsigned a = 0; a <= max_symbol; ++a) {
        Word ext = w;
        ext.push_back(static_cast<Symbol>(a));
        if (inner.domain().contains(WordView(ext).last(inner.window()))) next.push_back(std::move(ext));
      }
    frontier = std::move(next);
  }
  std::vector<Word> words;
  std::vector<Symbol> image;
  for (const Word& w : frontier) {
    Word mid = apply_code(inner, w);
    if (auto s = outer.lookup(mid)) words.push_back(w);
  }
  auto domain = std::make_shared<const WordList>(WordList::from_words(length, words));
  image.reserve(domain->size());
  for (WordView w : *domain) image.push_back(*outer.lookup(apply_code(inner, w)));
  return BlockMapCode(range, std::move(domain), std::move(image));
}

}  // namespace subshift
