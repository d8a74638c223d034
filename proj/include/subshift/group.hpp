#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <string>
#include <vector>

#include "subshift/error.hpp"

namespace subshift {

/// A finite group given by its Cayley table. Element 0 is the identity and
/// the index order is the canonical element ordering h_1, h_2, ...
struct FiniteGroup {
  std::string name;
  std::vector<std::vector<std::size_t>> cayley;

  std::size_t order() const noexcept { return cayley.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return cayley[a][b]; }

  std::size_t inverse(std::size_t a) const {
    for (std::size_t b = 0; b < order(); ++b)
      if (cayley[a][b] == 0) return b;
    throw InternalError("element " + std::to_string(a) + " has no inverse");
  }
};

inline FiniteGroup cyclic_group(std::size_t n) {
  FiniteGroup g{"Z" + std::to_string(n), {}};
  g.cayley.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.cayley[a][b] = (a + b) % n;
  return g;
}

/// Groups H_1 < H_2 < ... < H_K. embeddings[k][h] is the index in
/// groups[k+1] of element h of groups[k].
struct GroupChain {
  std::vector<FiniteGroup> groups;
  std::vector<std::vector<std::size_t>> embeddings;

  std::size_t levels() const noexcept { return groups.size(); }
};

struct Violation {
  std::string check;
  std::string detail;
};

struct ChainValidation {
  bool pass = true;
  std::vector<Violation> violations;

  void fail(std::string check, std::string detail) {
    pass = false;
    violations.push_back({std::move(check), std::move(detail)});
  }
};

namespace detail {

inline std::string group_label(const FiniteGroup& g, std::size_t level) {
  return "H_" + std::to_string(level + 1) + (g.name.empty() ? "" : " (" + g.name + ")");
}

// Returns false when the table is too malformed for the later checks.
inline bool check_group_axioms(const FiniteGroup& g, std::size_t level,
                               ChainValidation& report) {
  const std::string label = group_label(g, level);
  const std::size_t n = g.order();
  if (n == 0) {
    report.fail("shape", label + " is empty");
    return false;
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (g.cayley[a].size() != n) {
      report.fail("shape", label + " row " + std::to_string(a) + " has " +
                               std::to_string(g.cayley[a].size()) + " entries, expected " +
                               std::to_string(n));
      return false;
    }
    for (std::size_t b = 0; b < n; ++b)
      if (g.cayley[a][b] >= n) {
        report.fail("closure", label + " entry " + std::to_string(a) + "*" +
                                   std::to_string(b) + " = " +
                                   std::to_string(g.cayley[a][b]) + " out of range");
        return false;
      }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (g.cayley[0][a] != a || g.cayley[a][0] != a) {
      report.fail("identity", label + ": element 0 is not a two-sided identity at " +
                                  std::to_string(a));
      break;
    }
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b)
      found = g.cayley[a][b] == 0 && g.cayley[b][a] == 0;
    if (!found) {
      report.fail("inverse", label + ": element " + std::to_string(a) +
                                 " has no two-sided inverse");
      break;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.cayley[g.cayley[a][b]][c] != g.cayley[a][g.cayley[b][c]]) {
          report.fail("associativity", label + ": (" + std::to_string(a) + "*" +
                                           std::to_string(b) + ")*" + std::to_string(c) +
                                           " != " + std::to_string(a) + "*(" +
                                           std::to_string(b) + "*" + std::to_string(c) + ")");
          return true;
        }
  return true;
}

}  // namespace detail

/// Checks group axioms on every table, and that every embedding is a proper
/// injective homomorphism. Failures are collected, never thrown.
inline ChainValidation validate_chain(const GroupChain& chain) {
  ChainValidation report;
  if (chain.groups.empty()) {
    report.fail("shape", "chain has no groups");
    return report;
  }
  if (chain.embeddings.size() + 1 != chain.groups.size()) {
    report.fail("shape", "expected " + std::to_string(chain.groups.size() - 1) +
                             " embeddings, got " + std::to_string(chain.embeddings.size()));
    return report;
  }
  std::vector<bool> usable(chain.groups.size());
  for (std::size_t k = 0; k < chain.groups.size(); ++k)
    usable[k] = detail::check_group_axioms(chain.groups[k], k, report);

  if (chain.groups.front().order() < 2)
    report.fail("min_order", "H_1 must have at least two elements");

  for (std::size_t k = 0; k + 1 < chain.groups.size(); ++k) {
    const FiniteGroup& from = chain.groups[k];
    const FiniteGroup& to = chain.groups[k + 1];
    const auto& emb = chain.embeddings[k];
    const std::string label = "embedding H_" + std::to_string(k + 1) + " -> H_" +
                              std::to_string(k + 2);
    if (from.order() >= to.order())
      report.fail("proper", label + ": |H_" + std::to_string(k + 1) + "| = " +
                                std::to_string(from.order()) + " is not less than |H_" +
                                std::to_string(k + 2) + "| = " + std::to_string(to.order()));
    if (emb.size() != from.order()) {
      report.fail("embedding_size", label + " lists " + std::to_string(emb.size()) +
                                        " images for " + std::to_string(from.order()) +
                                        " elements");
      continue;
    }
    bool in_range = true;
    for (std::size_t h = 0; h < emb.size(); ++h)
      if (emb[h] >= to.order()) {
        report.fail("embedding_range", label + ": image of " + std::to_string(h) +
                                           " out of range");
        in_range = false;
        break;
      }
    if (!in_range) continue;
    auto first_collision = [&]() -> std::optional<std::pair<std::size_t, std::size_t>> {
      for (std::size_t a = 0; a < emb.size(); ++a)
        for (std::size_t b = a + 1; b < emb.size(); ++b)
          if (emb[a] == emb[b]) return std::pair{a, b};
      return std::nullopt;
    };
    if (auto c = first_collision())
      report.fail("injective", label + ": elements " + std::to_string(c->first) + " and " +
                                   std::to_string(c->second) + " share image " +
                                   std::to_string(emb[c->first]));
    if (!usable[k] || !usable[k + 1]) continue;
    auto first_non_hom = [&]() -> std::optional<std::pair<std::size_t, std::size_t>> {
      for (std::size_t a = 0; a < emb.size(); ++a)
        for (std::size_t b = 0; b < emb.size(); ++b)
          if (emb[from.mul(a, b)] != to.mul(emb[a], emb[b])) return std::pair{a, b};
      return std::nullopt;
    };
    if (auto c = first_non_hom())
      report.fail("homomorphism", label + ": image of " + std::to_string(c->first) + "*" +
                                      std::to_string(c->second) +
                                      " is not the product of images");
  }
  return report;
}

}  // namespace subshift
