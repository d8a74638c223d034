#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "subshift/error.hpp"
#include "subshift/language.hpp"

namespace subshift {

/// Growth-rate indicators for a complexity function; logs are natural.
enum class Indicator {
  log_ratio,   // log(c_n / n) / log log log n, n >= 16
  power_1_25,  // c_n / (n^1.25 (log n)^-0.5)
  power_1_5,   // c_n log n / n^1.5
  power_2,     // c_n log n / n^2
};

inline Indicator parse_indicator(std::string_view tag) {
  if (tag == "log-ratio") return Indicator::log_ratio;
  if (tag == "n1.25") return Indicator::power_1_25;
  if (tag == "n1.5") return Indicator::power_1_5;
  if (tag == "n2") return Indicator::power_2;
  throw InputError("unknown indicator '" + std::string(tag) + "'");
}

inline std::string to_string(Indicator i) {
  switch (i) {
    case Indicator::log_ratio: return "log-ratio";
    case Indicator::power_1_25: return "n1.25";
    case Indicator::power_1_5: return "n1.5";
    case Indicator::power_2: return "n2";
  }
  return "?";
}

inline std::size_t first_admissible(Indicator i) noexcept {
  return i == Indicator::log_ratio ? 16 : 2;
}

template <class Real>
Real indicator_value(Indicator tag, std::uint64_t n, std::uint64_t c) {
  using std::log;
  using std::pow;
  using std::sqrt;
  const Real rn(n);
  const Real rc(c);
  switch (tag) {
    case Indicator::log_ratio: return log(rc / rn) / log(log(log(rn)));
    case Indicator::power_1_25: return rc * sqrt(log(rn)) / pow(rn, Real(1.25));
    case Indicator::power_1_5: return rc * log(rn) / pow(rn, Real(1.5));
    case Indicator::power_2: return rc * log(rn) / (rn * rn);
  }
  throw InternalError("unhandled indicator");
}

template <class Real>
struct ThresholdRow {
  std::size_t n = 0;
  Real value{};
  Real running_min{};  // min over m in [first admissible, n]
};

template <class Real>
struct ThresholdReport {
  Indicator tag{};
  std::vector<ThresholdRow<Real>> rows;
};

template <class Real = double>
ThresholdReport<Real> threshold_stats(const ComplexityProfile& profile, Indicator tag) {
  const std::size_t start = first_admissible(tag);
  const std::size_t depth = profile.c.size();
  if (depth < start)
    throw InputError("indicator " + to_string(tag) + " needs n >= " + std::to_string(start) +
                     ", profile stops at " + std::to_string(depth));
  ThresholdReport<Real> rep;
  rep.tag = tag;
  for (std::size_t n = start; n <= depth; ++n) {
    ThresholdRow<Real> row;
    row.n = n;
    row.value = indicator_value<Real>(tag, n, profile.at(n));
    row.running_min = rep.rows.empty() || row.value < rep.rows.back().running_min
                          ? row.value
                          : rep.rows.back().running_min;
    rep.rows.push_back(row);
  }
  return rep;
}

/// Indices n in [2, horizon] with f(n) < g(1) + ... + g(n) and
/// f(n) - f(n-1) < g(n); f and g are given from n = 1.
inline std::vector<std::size_t> find_diff_indices(const std::vector<std::int64_t>& f,
                                                  const std::vector<std::int64_t>& g,
                                                  std::size_t horizon) {
  if (f.size() != g.size())
    throw InputError("sequence lengths differ: " + std::to_string(f.size()) + " vs " +
                     std::to_string(g.size()));
  if (horizon > f.size())
    throw InputError("horizon " + std::to_string(horizon) + " exceeds sequence length " +
                     std::to_string(f.size()));
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] <= 0 || g[i] <= 0)
      throw InputError("sequences must be positive (index " + std::to_string(i + 1) + ")");
  std::vector<std::size_t> out;
  if (horizon == 0) return out;
  std::int64_t sum = g[0];
  for (std::size_t n = 2; n <= horizon; ++n) {
    if (__builtin_add_overflow(sum, g[n - 1], &sum)) throw InputError("partial sum overflows");
    if (f[n - 1] < sum && f[n - 1] - f[n - 2] < g[n - 1]) out.push_back(n);
  }
  return out;
}

}  // namespace subshift
