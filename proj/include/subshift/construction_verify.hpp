#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "subshift/construction.hpp"
#include "subshift/error.hpp"
#include "subshift/language.hpp"

namespace subshift {

using BigInt = boost::multiprecision::cpp_int;

struct StructureReport {
  std::size_t level = 0;  // k; the checks run over A_{k+1}
  std::uint64_t repetition_threshold = 0;
  bool minimality = true;
  bool decomposition = true;
  bool consistency = true;
  bool not_shift = true;
  std::vector<std::uint64_t> leading_runs;
  std::vector<std::uint64_t> trailing_runs;
  std::uint64_t max_interior_run = 0;
  std::vector<std::string> witnesses;

  bool pass() const noexcept { return minimality && decomposition && consistency && not_shift; }
};

namespace detail {

inline std::vector<std::uint64_t> run_lengths(const std::vector<std::size_t>& blocks) {
  std::vector<std::uint64_t> runs;
  for (std::size_t i = 0; i < blocks.size();) {
    std::size_t j = i;
    while (j < blocks.size() && blocks[j] == blocks[i]) ++j;
    runs.push_back(j - i);
    i = j;
  }
  return runs;
}

inline std::optional<std::size_t> first_difference(const Word& a, const Word& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return i;
  if (a.size() != b.size()) return n;
  return std::nullopt;
}

}  // namespace detail

/// Hypotheses of minimality and unique decomposition, the level-consistency
/// identity for block permutations, and the check that no permutation acts
/// as a nontrivial shift, all evaluated on the given families A_k and A_{k+1}.
inline StructureReport verify_structure(const ConstructionSpec& spec, const AkWordFamily& lower,
                                        const AkWordFamily& upper) {
  const std::size_t k = lower.level;
  if (upper.level != k + 1) throw InputError("families must be consecutive levels");
  StructureReport rep;
  rep.level = k;
  const std::uint64_t d = spec.level(k + 1).repetition_threshold;
  rep.repetition_threshold = d;
  const FiniteGroup& group_k = spec.group(k);
  const FiniteGroup& group_next = spec.group(k + 1);
  const BlockDecoder lower_decoder(lower);

  std::vector<Word> words = upper.words();
  for (std::size_t g = 0; g < words.size(); ++g) {
    const std::string label = "w_" + std::to_string(g) + "^(" + std::to_string(k + 1) + ")";
    std::vector<std::size_t> blocks;
    try {
      blocks = lower_decoder.decode(words[g]);
    } catch (const DomainError& e) {
      rep.minimality = rep.decomposition = false;
      rep.witnesses.push_back(label + ": " + e.what());
      continue;
    }
    std::vector<bool> present(lower.order, false);
    for (std::size_t b : blocks) present[b] = true;
    for (std::size_t h = 0; h < lower.order; ++h)
      if (!present[h]) {
        rep.minimality = false;
        rep.witnesses.push_back(label + " omits A_" + std::to_string(k) + " word " +
                                std::to_string(h));
      }

    const auto runs = detail::run_lengths(blocks);
    rep.leading_runs.push_back(runs.front());
    rep.trailing_runs.push_back(runs.back());
    if (runs.size() < 3 || runs.front() < d || runs.back() < d) {
      rep.decomposition = false;
      rep.witnesses.push_back(label + ": boundary runs " + std::to_string(runs.front()) + "/" +
                              std::to_string(runs.back()) + " below d = " + std::to_string(d));
    }
    std::uint64_t offset = runs.front();
    for (std::size_t i = 1; i + 1 < runs.size(); ++i) {
      rep.max_interior_run = std::max(rep.max_interior_run, runs[i]);
      if (runs[i] >= d) {
        rep.decomposition = false;
        rep.witnesses.push_back(label + ": interior run of " + std::to_string(runs[i]) +
                                " blocks at block " + std::to_string(offset));
      }
      offset += runs[i];
    }
  }

  const BlockDecoder upper_decoder(upper);
  for (std::size_t h = 0; h < group_k.order(); ++h) {
    const std::size_t lifted = spec.embed(h, k, k + 1);
    for (std::size_t g = 0; g < words.size(); ++g) {
      Word via_lower, via_upper;
      try {
        via_lower = pi_apply(group_k, lower, lower_decoder, h, words[g]);
        via_upper = pi_apply(group_next, upper, upper_decoder, lifted, words[g]);
      } catch (const DomainError& e) {
        rep.consistency = false;
        rep.witnesses.push_back("consistency for h=" + std::to_string(h) + ", g=" +
                                std::to_string(g) + ": " + e.what());
        continue;
      }
      if (auto pos = detail::first_difference(via_lower, via_upper)) {
        rep.consistency = false;
        rep.witnesses.push_back("consistency fails for h=" + std::to_string(h) + " on w_" +
                                std::to_string(g) + " at position " + std::to_string(*pos));
      }
    }
  }

  // pi_{k,h} on w_id w_id against every shift by |m| < n_{k+1}.
  const Word& base = words.front();
  const Word doubled = concat(base, base);
  const auto len = static_cast<std::int64_t>(doubled.size());
  const auto n_next = static_cast<std::int64_t>(upper.length);
  for (std::size_t h = 1; h < group_k.order(); ++h) {
    Word moved;
    try {
      moved = pi_apply(group_k, lower, lower_decoder, h, doubled);
    } catch (const DomainError& e) {
      rep.not_shift = false;
      rep.witnesses.push_back(std::string("not-a-shift: ") + e.what());
      continue;
    }
    for (std::int64_t m = -(n_next - 1); m <= n_next - 1; ++m) {
      bool differs = false;
      for (std::int64_t i = std::max<std::int64_t>(0, -m); i < len && i + m < len; ++i)
        if (moved[static_cast<std::size_t>(i)] != doubled[static_cast<std::size_t>(i + m)]) {
          differs = true;
          break;
        }
      if (!differs) {
        rep.not_shift = false;
        rep.witnesses.push_back("pi_{" + std::to_string(k) + "," + std::to_string(h) +
                                "} agrees with the shift by " + std::to_string(m));
      }
    }
  }
  return rep;
}

inline StructureReport verify_structure(const ConstructionSpec& spec, std::size_t k) {
  if (k < 1 || k + 1 > spec.top_level())
    throw InputError("structure check at level " + std::to_string(k) + " needs level " +
                     std::to_string(k + 1) + " in the spec");
  return verify_structure(spec, build_Ak(spec, k), build_Ak(spec, k + 1));
}

struct IsomorphismReport {
  std::size_t level = 0;
  std::size_t identities_checked = 0;
  std::size_t identities_failed = 0;
  bool injective = true;
  std::vector<std::string> witnesses;

  bool pass() const noexcept { return identities_failed == 0 && injective; }
};

/// Checks pi_h after pi_h' equals pi_{hh'} on every A_k word and that
/// h -> pi_h is injective.
inline IsomorphismReport group_isomorphism_check(const ConstructionSpec& spec, std::size_t k) {
  const AkWordFamily family = build_Ak(spec, k);
  const FiniteGroup& group = spec.group(k);
  const BlockDecoder decoder(family);
  const std::vector<Word> words = family.words();
  IsomorphismReport rep;
  rep.level = k;

  std::vector<std::vector<std::size_t>> perms(group.order());
  for (std::size_t h = 0; h < group.order(); ++h)
    for (const Word& w : words)
      perms[h].push_back(*decoder.element(pi_apply(group, family, decoder, h, w)));

  for (std::size_t h = 0; h < group.order(); ++h)
    for (std::size_t h2 = 0; h2 < group.order(); ++h2) {
      ++rep.identities_checked;
      const std::size_t prod = group.mul(h, h2);
      for (std::size_t g = 0; g < words.size(); ++g) {
        Word twice = pi_apply(group, family, decoder, h,
                              pi_apply(group, family, decoder, h2, words[g]));
        if (twice != pi_apply(group, family, decoder, prod, words[g])) {
          ++rep.identities_failed;
          rep.witnesses.push_back("pi_" + std::to_string(h) + " o pi_" + std::to_string(h2) +
                                  " != pi_" + std::to_string(prod) + " on w_" + std::to_string(g));
          break;
        }
      }
    }
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = a + 1; b < perms.size(); ++b)
      if (perms[a] == perms[b]) {
        rep.injective = false;
        rep.witnesses.push_back("elements " + std::to_string(a) + " and " + std::to_string(b) +
                                " induce the same permutation");
      }
  return rep;
}

struct AuditRow {
  std::size_t n = 0;
  std::uint64_t c_n = 0;
  int regime = 1;  // 1: n < b_{k+1} n_k, 2: otherwise
  BigInt bound;
  std::uint64_t j = 0;       // regime 2 only
  bool j_within = true;      // j < 5|H_{k+1}| + 2|H_k|^2
  bool ok = false;
};

struct AuditReport {
  std::size_t level = 0;
  std::vector<AuditRow> rows;
  bool pass = true;
};

/// Compares c_n with the counting bounds for n in [n_k, n_{k+1}), up to the
/// table depth (inclusive).
inline AuditReport construction_complexity_audit(const ConstructionSpec& spec,
                                                 const LanguageTable& table, std::size_t k) {
  if (k < 1 || k + 1 > spec.top_level())
    throw InputError("audit at level " + std::to_string(k) + " needs level " +
                     std::to_string(k + 1) + " in the spec");
  const std::uint64_t n_k = spec.level(k).block_length;
  const std::uint64_t n_next = spec.level(k + 1).block_length;
  const std::uint64_t b = spec.level(k + 1).multiplicity;
  const std::uint64_t order_k = spec.level(k).order;
  const std::uint64_t order_next = spec.level(k + 1).order;
  if (table.depth() < n_k)
    throw DepthError("audit at level " + std::to_string(k) + " needs depth >= n_k = " +
                     std::to_string(n_k));
  table.require_nonempty();
  AuditReport rep;
  rep.level = k;
  const std::uint64_t last = std::min<std::uint64_t>(table.depth(), n_next - 1);
  for (std::uint64_t n = n_k; n <= last; ++n) {
    AuditRow row;
    row.n = n;
    row.c_n = table.complexity(n);
    if (n < b * n_k) {
      row.regime = 1;
      row.bound = BigInt(n) * order_k * order_k;
    } else {
      row.regime = 2;
      row.j = (n + b * n_k - 1) / (b * n_k) + 1;
      row.j_within = row.j < 5 * order_next + 2 * order_k * order_k;
      row.bound = BigInt(b * n_k) *
                  boost::multiprecision::pow(BigInt(order_k), static_cast<unsigned>(row.j + 1));
    }
    row.ok = BigInt(row.c_n) <= row.bound && row.j_within;
    rep.pass = rep.pass && row.ok;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

/// Monotone growth function f used to pick b_k.
struct GrowthFunction {
  enum class Family { identity, floor_log2, floor_sqrt, table };
  Family family = Family::identity;
  std::vector<std::uint64_t> values;  // f(1), f(2), ... when family == table

  static GrowthFunction named(std::string_view name) {
    if (name == "n" || name == "identity") return {Family::identity, {}};
    if (name == "log2" || name == "floor_log2") return {Family::floor_log2, {}};
    if (name == "sqrt" || name == "floor_sqrt") return {Family::floor_sqrt, {}};
    throw InputError("unknown growth function '" + std::string(name) + "'");
  }

  static GrowthFunction tabulated(std::vector<std::uint64_t> values) {
    if (values.empty()) throw InputError("growth table is empty");
    for (std::size_t i = 1; i < values.size(); ++i)
      if (values[i] < values[i - 1])
        throw InputError("growth table is not monotone at n = " + std::to_string(i + 1));
    return {Family::table, std::move(values)};
  }
};

struct BThreshold {
  std::size_t level = 0;
  BigInt threshold;               // T_k = k |H_k|^(5|H_{k+1}| + 2|H_k|^2)
  std::optional<BigInt> least_b;  // least b >= 2 with f(b) > T_k, when computable
  std::string symbolic;           // set when least_b is absent
};

/// Thresholds T_k that f(b_k) must exceed for the low-complexity estimate.
inline std::vector<BThreshold> required_b_lower_bounds(const GroupChain& chain,
                                                       const GrowthFunction& f) {
  const ChainValidation v = validate_chain(chain);
  if (!v.pass) throw InputError("invalid group chain: " + v.violations.front().detail);
  constexpr unsigned kMaxExplicitBits = 1u << 16;
  std::vector<BThreshold> out;
  for (std::size_t k = 1; k < chain.levels(); ++k) {
    const std::uint64_t h = chain.groups[k - 1].order();
    const std::uint64_t h_next = chain.groups[k].order();
    BThreshold t;
    t.level = k;
    const auto exponent = static_cast<unsigned>(5 * h_next + 2 * h * h);
    t.threshold = BigInt(k) * boost::multiprecision::pow(BigInt(h), exponent);
    const std::string need = "b must satisfy f(b) > " + t.threshold.str();
    switch (f.family) {
      case GrowthFunction::Family::identity:
        t.least_b = std::max<BigInt>(2, t.threshold + 1);
        break;
      case GrowthFunction::Family::floor_sqrt:
        t.least_b = std::max<BigInt>(2, (t.threshold + 1) * (t.threshold + 1));
        break;
      case GrowthFunction::Family::floor_log2:
        if (t.threshold + 1 <= kMaxExplicitBits)
          t.least_b = BigInt(1) << static_cast<unsigned>(t.threshold + 1);
        else
          t.symbolic = need + " (least b = 2^" + BigInt(t.threshold + 1).str() + ")";
        break;
      case GrowthFunction::Family::table:
        for (std::size_t i = 2; i <= f.values.size(); ++i)
          if (BigInt(f.values[i - 1]) > t.threshold) {
            t.least_b = BigInt(i);
            break;
          }
        if (!t.least_b) t.symbolic = need + " (beyond the supplied table)";
        break;
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace subshift
