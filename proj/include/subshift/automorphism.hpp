#pragma once

// Exhaustive enumeration of range-bounded block codes that act on a language
// table, certified inverses, and the branch-word bound on automorphism counts.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "subshift/block_code.hpp"
#include "subshift/branch.hpp"
#include "subshift/error.hpp"
#include "subshift/language.hpp"
#include "subshift/word.hpp"

namespace subshift {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct AutomorphismCertificate {
  BlockMapCode forward;
  BlockMapCode inverse;
  std::size_t verified_depth = 0;
};

struct EnumerationOptions {
  std::size_t range = 0;          // r
  std::size_t inverse_range = 0;  // R
  std::size_t check_depth = 0;    // M
  bool fip_only = false;
  std::uint64_t node_budget = kDefaultNodeBudget;
  unsigned threads = 1;
};

struct EnumerationResult {
  std::vector<AutomorphismCertificate> certified;
  std::vector<BlockMapCode> candidates;
  std::uint64_t nodes = 0;
  std::size_t certified_classes = 0;  // distinct actions on L_M among certified codes
  std::size_t comparable_count = 0;   // certified classes plus candidates acting differently
  std::vector<Word> fixed_periodic_blocks;  // one period of each pinned periodic point
  bool periodic_depth_limited = false;
};

/// Concatenated images of every word of L_M; equal actions give equal keys.
inline Word action_on(const BlockMapCode& code, const WordList& words) {
  Word out;
  for (WordView w : words) {
    Word img = apply_code(code, w);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

/// Round-trip check through apply_code, independent of the search's
/// constraint tables.
inline bool verify_certificate(const LanguageTable& table, const AutomorphismCertificate& cert) {
  const std::size_t m = cert.verified_depth;
  const std::size_t trim = cert.forward.range() + cert.inverse.range();
  if (m < 2 * trim + 1 || m > table.depth()) return false;
  try {
    for (WordView w : table.level(m)) {
      Word back = apply_code(cert.inverse, apply_code(cert.forward, w));
      if (!equal_words(back, w.subspan(trim, m - 2 * trim))) return false;
    }
  } catch (const DomainError&) {
    return false;
  }
  return true;
}

namespace detail {

/// Windows of length 2r+1 of the periodic point repeating `block`, paired
/// with their centre symbols, one per phase.
inline std::vector<std::pair<Word, Symbol>> periodic_windows(WordView block, std::size_t r) {
  std::vector<std::pair<Word, Symbol>> out;
  const std::size_t p = block.size();
  for (std::size_t phase = 0; phase < p; ++phase) {
    Word window(2 * r + 1);
    for (std::size_t i = 0; i < window.size(); ++i) window[i] = block[(phase + i) % p];
    out.emplace_back(std::move(window), block[(phase + r) % p]);
  }
  return out;
}

class CodeSearch {
 public:
  CodeSearch(const LanguageTable& table, const EnumerationOptions& opts)
      : table_(table), opts_(opts), domain_(code_domain(table, opts.range)) {
    const std::size_t r = opts.range;
    const std::size_t window = 2 * r + 1;
    const std::size_t k = table.alphabet().size();
    choices_.assign(domain_->size(), {});
    for (auto& c : choices_)
      for (std::size_t a = 0; a < k; ++a) c.push_back(static_cast<Symbol>(a));

    if (opts.fip_only) pin_periodic_points();

    // Every word of length m in [2r+1, M] must map into L_{m-2r}. Each such
    // check fires once its last-assigned window is fixed.
    buckets_.assign(domain_->size(), {});
    for (std::size_t m = window; m <= opts.check_depth; ++m)
      for (WordView u : table.level(m)) {
        Constraint c;
        c.windows.reserve(m - 2 * r);
        std::uint32_t last = 0;
        for (std::size_t i = 0; i + window <= m; ++i) {
          const auto idx = static_cast<std::uint32_t>(*domain_->index_of(u.subspan(i, window)));
          c.windows.push_back(idx);
          last = std::max(last, idx);
        }
        buckets_[last].push_back(constraints_.size());
        constraints_.push_back(std::move(c));
      }

    inverse_domain_ = code_domain(table, opts.inverse_range);
    const WordList& top = table.level(opts.check_depth);
    for (WordView u : top) {
      std::vector<std::uint32_t> idx;
      for (std::size_t i = 0; i + window <= u.size(); ++i)
        idx.push_back(static_cast<std::uint32_t>(*domain_->index_of(u.subspan(i, window))));
      top_windows_.push_back(std::move(idx));
    }
  }

  EnumerationResult run() {
    const std::size_t vars = domain_->size();
    // Split the tree on a short prefix so workers get disjoint subtrees.
    std::size_t split = 0;
    std::size_t leaves = 1;
    const unsigned threads = std::max(1u, opts_.threads);
    while (split < vars && threads > 1 && leaves < 8 * threads) leaves *= choices_[split++].size();

    std::vector<std::vector<Symbol>> prefixes;
    {
      Worker seed_worker(*this);
      std::vector<Symbol> assign(vars);
      collect_prefixes(seed_worker, assign, 0, split, prefixes);
      seed_worker.flush();
    }

    std::atomic<std::size_t> next{0};
    std::vector<Worker> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) workers.emplace_back(*this);
    auto work = [&](Worker& w) {
      std::vector<Symbol> assign(vars);
      for (std::size_t i; (i = next.fetch_add(1)) < prefixes.size() && !aborted_.load();) {
        std::copy(prefixes[i].begin(), prefixes[i].end(), assign.begin());
        w.dfs(assign, split);
      }
      w.flush();
    };
    if (threads == 1) {
      work(workers.front());
    } else {
      std::vector<std::thread> pool;
      for (auto& w : workers) pool.emplace_back(work, std::ref(w));
      for (auto& t : pool) t.join();
    }

    EnumerationResult result;
    result.fixed_periodic_blocks = pinned_blocks_;
    result.periodic_depth_limited = periodic_depth_limited_;
    std::size_t found = 0;
    for (auto& w : workers) found += w.certified.size() + w.candidates.size();
    if (aborted_.load())
      throw BudgetExceeded("node budget of " + std::to_string(opts_.node_budget) +
                               " exceeded; partial enumeration found " + std::to_string(found) +
                               " codes",
                           found);
    for (auto& w : workers) {
      for (auto& c : w.certified) result.certified.push_back(std::move(c));
      for (auto& c : w.candidates) result.candidates.push_back(std::move(c));
    }
    result.nodes = nodes_.load();
    std::sort(result.certified.begin(), result.certified.end(),
              [](const auto& a, const auto& b) { return a.forward < b.forward; });
    std::sort(result.candidates.begin(), result.candidates.end());

    const WordList& top = table_.level(opts_.check_depth);
    std::map<Word, int> actions;
    for (const auto& c : result.certified) actions.emplace(action_on(c.forward, top), 0);
    result.certified_classes = actions.size();
    for (const auto& c : result.candidates) actions.emplace(action_on(c, top), 1);
    result.comparable_count = actions.size();
    return result;
  }

 private:
  struct Constraint {
    std::vector<std::uint32_t> windows;
  };

  struct Worker {
    explicit Worker(CodeSearch& s) : search(s) {}
    CodeSearch& search;
    std::uint64_t local_nodes = 0;
    std::vector<AutomorphismCertificate> certified;
    std::vector<BlockMapCode> candidates;
    Word scratch;

    void flush() {
      search.nodes_.fetch_add(local_nodes);
      local_nodes = 0;
    }

    bool count_node() {
      ++local_nodes;
      if (search.nodes_.load(std::memory_order_relaxed) + local_nodes > search.opts_.node_budget)
        search.aborted_.store(true);
      if (local_nodes >= 1024) flush();
      return !search.aborted_.load(std::memory_order_relaxed);
    }

    bool consistent(const std::vector<Symbol>& assign, std::size_t j) {
      for (std::size_t ci : search.buckets_[j]) {
        const Constraint& c = search.constraints_[ci];
        scratch.resize(c.windows.size());
        for (std::size_t i = 0; i < c.windows.size(); ++i) scratch[i] = assign[c.windows[i]];
        if (!search.table_.level(scratch.size()).contains(scratch)) return false;
      }
      return true;
    }

    void dfs(std::vector<Symbol>& assign, std::size_t j) {
      if (j == assign.size()) {
        search.finish(assign, *this);
        return;
      }
      for (Symbol s : search.choices_[j]) {
        if (!count_node()) return;
        assign[j] = s;
        if (consistent(assign, j)) dfs(assign, j + 1);
      }
    }
  };

  void collect_prefixes(Worker& w, std::vector<Symbol>& assign, std::size_t j, std::size_t split,
                        std::vector<std::vector<Symbol>>& out) {
    if (j == split) {
      out.emplace_back(assign.begin(), assign.begin() + static_cast<std::ptrdiff_t>(split));
      return;
    }
    for (Symbol s : choices_[j]) {
      if (!w.count_node()) return;
      assign[j] = s;
      if (w.consistent(assign, j)) collect_prefixes(w, assign, j + 1, split, out);
    }
  }

  void pin_periodic_points() {
    const std::size_t n = 2 * opts_.range + 1;
    if (n + 1 > table_.depth()) {
      periodic_depth_limited_ = true;
      return;
    }
    const PeriodicWitnessReport report = periodic_witnesses(table_, n);
    periodic_depth_limited_ = report.depth_limited || !report.certified();
    std::vector<Word> blocks;
    for (const auto& w : report.witnesses) blocks.emplace_back(w.fundamental_block().begin(),
                                                              w.fundamental_block().end());
    sort_unique(blocks);
    pinned_blocks_ = blocks;
    for (const Word& b : blocks)
      for (const auto& [window, centre] : periodic_windows(b, opts_.range)) {
        auto idx = domain_->index_of(window);
        if (!idx) throw InternalError("periodic point window outside the language");
        choices_[*idx] = {centre};
      }
  }

  // Solves for the unique left inverse of range R on the windows the forward
  // image reaches; unreached entries default to the centre symbol.
  std::optional<BlockMapCode> find_inverse(const std::vector<Symbol>& assign) const {
    const std::size_t r = opts_.range;
    const std::size_t big_r = opts_.inverse_range;
    const std::size_t iw = 2 * big_r + 1;
    std::vector<int> image(inverse_domain_->size(), -1);
    const WordList& top = table_.level(opts_.check_depth);
    Word v;
    for (std::size_t t = 0; t < top.size(); ++t) {
      WordView u = top[t];
      const auto& wins = top_windows_[t];
      v.resize(wins.size());
      for (std::size_t i = 0; i < wins.size(); ++i) v[i] = assign[wins[i]];
      for (std::size_t j = 0; j + iw <= v.size(); ++j) {
        auto idx = inverse_domain_->index_of(WordView(v).subspan(j, iw));
        if (!idx) return std::nullopt;
        const int want = u[j + r + big_r];
        if (image[*idx] == -1)
          image[*idx] = want;
        else if (image[*idx] != want)
          return std::nullopt;
      }
    }
    std::vector<Symbol> table(image.size());
    for (std::size_t i = 0; i < image.size(); ++i)
      table[i] = image[i] >= 0 ? static_cast<Symbol>(image[i]) : (*inverse_domain_)[i][big_r];
    return BlockMapCode(big_r, inverse_domain_, std::move(table));
  }

  void finish(const std::vector<Symbol>& assign, Worker& w) const {
    BlockMapCode forward(opts_.range, domain_, assign);
    if (auto inverse = find_inverse(assign))
      w.certified.push_back({std::move(forward), std::move(*inverse), opts_.check_depth});
    else
      w.candidates.push_back(std::move(forward));
  }

  const LanguageTable& table_;
  EnumerationOptions opts_;
  std::shared_ptr<const WordList> domain_;
  std::shared_ptr<const WordList> inverse_domain_;
  std::vector<std::vector<Symbol>> choices_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<std::size_t>> buckets_;
  std::vector<std::vector<std::uint32_t>> top_windows_;
  std::vector<Word> pinned_blocks_;
  bool periodic_depth_limited_ = false;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> aborted_{false};
};

}  // namespace detail

/// All range-r codes whose windowed action maps L_m into L_{m-2r} for
/// 2r+1 <= m <= M, split by whether a range-R inverse certifies the round
/// trip on L_M. With fip_only, codes must fix every certified periodic point
/// found at level 2r+1. Output is canonically sorted and independent of the
/// thread count.
inline EnumerationResult enumerate_automorphisms(const LanguageTable& table,
                                                 const EnumerationOptions& opts) {
  const std::size_t r = opts.range;
  if (2 * r + 1 > table.depth())
    throw DepthError("range " + std::to_string(r) + " needs depth >= " + std::to_string(2 * r + 1));
  if (opts.check_depth > table.depth())
    throw DepthError("check depth " + std::to_string(opts.check_depth) + " exceeds table depth " +
                     std::to_string(table.depth()));
  if (opts.check_depth < 2 * (r + opts.inverse_range) + 1)
    throw InputError("check depth must be at least 2(r + R) + 1 = " +
                     std::to_string(2 * (r + opts.inverse_range) + 1));
  table.require_nonempty();
  detail::CodeSearch search(table, opts);
  return search.run();
}

/// (c_{1+c_n})^(2|A|(c_{n+1} - c_n)), exact when c_{1+c_n} is in the table;
/// otherwise c_{1+c_n} is replaced by c_L^ceil((1+c_n)/L).
struct BoundValue {
  BigInt value;
  BigInt base;
  std::uint64_t exponent = 0;
  std::uint64_t base_level = 0;  // 1 + c_n
  std::uint64_t c_n = 0;
  std::uint64_t c_next = 0;
  std::size_t alphabet_size = 0;
  bool certified_exact = false;
};

inline BoundValue autbd_bound(const LanguageTable& table, std::size_t n) {
  if (n < 1 || n + 1 > table.depth())
    throw DepthError("bound at level " + std::to_string(n) + " needs depth >= " +
                     std::to_string(n + 1));
  table.require_nonempty();
  BoundValue b;
  b.c_n = table.complexity(n);
  b.c_next = table.complexity(n + 1);
  if (b.c_next < b.c_n) throw InputError("complexity decreases at level " + std::to_string(n));
  b.alphabet_size = table.alphabet().size();
  b.exponent = 2 * b.alphabet_size * (b.c_next - b.c_n);
  b.base_level = 1 + b.c_n;
  const std::uint64_t depth = table.depth();
  if (b.base_level <= depth) {
    b.base = table.complexity(b.base_level);
    b.certified_exact = true;
  } else {
    // c_{a+b} <= c_a c_b, so c_m <= c_L^ceil(m/L).
    const std::uint64_t power = (b.base_level + depth - 1) / depth;
    b.base = boost::multiprecision::pow(BigInt(table.complexity(depth)),
                                        static_cast<unsigned>(power));
    b.certified_exact = false;
  }
  b.value = boost::multiprecision::pow(b.base, static_cast<unsigned>(b.exponent));
  return b;
}

struct AutbdReport {
  std::size_t level = 0;
  std::size_t range = 0;
  std::size_t inverse_range = 0;
  std::size_t check_depth = 0;
  std::size_t certified = 0;
  std::size_t candidates = 0;
  std::size_t certified_classes = 0;
  std::size_t comparable_count = 0;
  BoundValue bound;
  bool count_ok = false;
  bool determination_ok = false;
  std::size_t determination_groups = 0;
  std::size_t branch_words = 0;
  std::size_t periodic_witnesses = 0;
  std::size_t periodic_detection_level = 0;
  bool depth_limited = false;
  std::vector<std::string> witnesses;
  bool pass = false;
};

/// Compares the enumerated FIP code count at range floor((n-1)/2) with the
/// bound, and checks that codes agreeing on every n-branch word and every
/// periodic point act identically on L_M.
inline AutbdReport verify_autbd(const LanguageTable& table, std::size_t n,
                                std::size_t inverse_range, std::size_t check_depth,
                                std::uint64_t node_budget = kDefaultNodeBudget,
                                unsigned threads = 1) {
  if (n < 1) throw InputError("level must be at least 1");
  AutbdReport rep;
  rep.level = n;
  rep.range = (n - 1) / 2;
  rep.inverse_range = inverse_range;
  rep.check_depth = check_depth;
  rep.bound = autbd_bound(table, n);

  EnumerationOptions opts{rep.range, inverse_range, check_depth, true, node_budget, threads};
  const EnumerationResult found = enumerate_automorphisms(table, opts);
  rep.certified = found.certified.size();
  rep.candidates = found.candidates.size();
  rep.certified_classes = found.certified_classes;
  rep.comparable_count = found.comparable_count;
  rep.count_ok = BigInt(rep.comparable_count) <= rep.bound.value;
  if (!rep.count_ok)
    rep.witnesses.push_back(std::to_string(rep.comparable_count) + " codes exceed the bound");

  const BranchWordSet branches = branch_words(table, n);
  const PeriodicWitnessReport periodic = periodic_witnesses(table, n);
  rep.branch_words = branches.count();
  rep.periodic_witnesses = periodic.witnesses.size();
  rep.periodic_detection_level = n;
  rep.depth_limited = branches.depth_limited || periodic.depth_limited ||
                      found.periodic_depth_limited || !periodic.certified();

  std::vector<const BlockMapCode*> codes;
  for (const auto& c : found.certified) codes.push_back(&c.forward);
  for (const auto& c : found.candidates) codes.push_back(&c);

  std::vector<Word> probes;
  for (const auto* side : {&branches.right, &branches.left})
    for (const Word& v : *side)
      if (v.size() >= 2 * rep.range + 1) probes.push_back(v);
  for (const auto& w : periodic.witnesses)
    for (auto& [window, centre] : detail::periodic_windows(w.fundamental_block(), rep.range))
      probes.push_back(window);

  const WordList& top = table.level(check_depth);
  std::map<Word, std::pair<Word, const BlockMapCode*>> groups;
  rep.determination_ok = true;
  for (const BlockMapCode* code : codes) {
    Word signature;
    for (const Word& p : probes) {
      Word img = apply_code(*code, p);
      signature.insert(signature.end(), img.begin(), img.end());
    }
    Word action = action_on(*code, top);
    auto [it, inserted] = groups.try_emplace(std::move(signature), std::move(action), code);
    if (!inserted && it->second.first != action_on(*code, top)) {
      rep.determination_ok = false;
      for (WordView u : top)
        if (apply_code(*code, u) != apply_code(*it->second.second, u)) {
          rep.witnesses.push_back("codes agree on branch words and periodic points but differ on " +
                                  format_word(table.alphabet(), u));
          break;
        }
    }
  }
  rep.determination_groups = groups.size();
  rep.pass = rep.count_ok && rep.determination_ok;
  return rep;
}

}  // namespace subshift
