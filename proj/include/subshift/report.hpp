#pragma once

// Report serialization. JSON documents carry a "schema" field naming the
// report kind and a "pass" field for verification reports; big integers are
// decimal strings. CSV output is a header row plus one row per record.

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "subshift/automorphism.hpp"
#include "subshift/branch.hpp"
#include "subshift/construction.hpp"
#include "subshift/construction_verify.hpp"
#include "subshift/error.hpp"
#include "subshift/group.hpp"
#include "subshift/language.hpp"
#include "subshift/thresholds.hpp"
#include "subshift/word.hpp"

namespace subshift {

using Json = nlohmann::json;

enum class Format { csv, json };

inline Format parse_format(std::string_view s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw InputError("unknown format '" + std::string(s) + "'");
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  bool operator==(const CsvTable&) const = default;
};

inline std::string csv_field(std::string_view f) {
  if (f.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(f);
  std::string out = "\"";
  for (char c : f) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline std::string to_csv(const CsvTable& t) {
  std::string out;
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += csv_field(fields[i]);
    }
    out += "\r\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return out;
}

/// RFC 4180 parser; the first record is the header.
inline CsvTable parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"' && !field_started) {
      quoted = field_started = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
      field_started = false;
    } else if (c == '\r' || c == '\n') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      record.push_back(std::move(field));
      records.push_back(std::move(record));
      record.clear();
      field.clear();
      field_started = false;
    } else {
      field += c;
      field_started = true;
    }
  }
  if (quoted) throw InputError("unterminated quoted CSV field");
  if (field_started || !record.empty()) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  if (records.empty()) throw InputError("CSV has no header");
  CsvTable t;
  t.header = std::move(records.front());
  t.rows.assign(std::make_move_iterator(records.begin() + 1),
                std::make_move_iterator(records.end()));
  return t;
}

/// Shortest decimal form that reads back to the same double.
inline std::string format_real(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

/// A report whose words are printed with the alphabet's symbol names.
template <class T>
struct Labeled {
  const T& value;
  const Alphabet& alphabet;
};

template <class T>
Labeled<T> labeled(const T& value, const Alphabet& alphabet) {
  return {value, alphabet};
}

struct SpecialWordsReport {
  std::size_t level = 0;
  Side side = Side::right;
  std::vector<Word> words;
};

struct AutCountReport {
  EnumerationOptions options;
  EnumerationResult result;
};

struct DiffIndicesReport {
  std::size_t horizon = 0;
  std::vector<std::size_t> indices;
};

namespace detail {

inline Json word_list_json(const Alphabet& a, const std::vector<Word>& words) {
  Json arr = Json::array();
  for (const Word& w : words) arr.push_back(format_word(a, w));
  return arr;
}

inline Json code_json(const Alphabet& a, const BlockMapCode& code) {
  Json table = Json::object();
  for (std::size_t i = 0; i < code.domain().size(); ++i)
    table[format_word(a, code.domain()[i])] = a.name(code.image()[i]);
  return {{"range", code.range()}, {"table", std::move(table)}};
}

inline std::string code_text(const Alphabet& a, const BlockMapCode& code) {
  std::string s;
  for (std::size_t i = 0; i < code.domain().size(); ++i) {
    if (i) s += ' ';
    s += format_word(a, code.domain()[i]) + "->" + a.name(code.image()[i]);
  }
  return s;
}

}  // namespace detail

// ---- complexity, special words ----

inline Json report_json(const ComplexityProfile& p) {
  return {{"schema", "complexity_profile"}, {"c", p.c}, {"diff", p.diff}};
}

inline CsvTable report_table(const ComplexityProfile& p) {
  CsvTable t{{"n", "c_n", "diff"}, {}};
  for (std::size_t n = 1; n <= p.depth(); ++n)
    t.rows.push_back({std::to_string(n), std::to_string(p.at(n)),
                      n <= p.diff.size() ? std::to_string(p.diff[n - 1]) : ""});
  return t;
}

inline Json report_json(const Labeled<SpecialWordsReport>& r) {
  return {{"schema", "special_words"},
          {"n", r.value.level},
          {"side", to_string(r.value.side)},
          {"count", r.value.words.size()},
          {"words", detail::word_list_json(r.alphabet, r.value.words)}};
}

inline CsvTable report_table(const Labeled<SpecialWordsReport>& r) {
  CsvTable t{{"word"}, {}};
  for (const Word& w : r.value.words) t.rows.push_back({format_word(r.alphabet, w)});
  return t;
}

inline Json report_json(const SpecialBoundReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"n", row.n},
                    {"right_special", row.right_special},
                    {"left_special", row.left_special},
                    {"c_n", row.c_n},
                    {"c_next", row.c_next},
                    {"diff", row.diff},
                    {"ok", row.ok}});
  return {{"schema", "special_bound"}, {"rows", std::move(rows)}, {"pass", r.pass}};
}

inline CsvTable report_table(const SpecialBoundReport& r) {
  CsvTable t{{"n", "right_special", "left_special", "c_n", "c_next", "diff", "ok"}, {}};
  for (const auto& row : r.rows)
    t.rows.push_back({std::to_string(row.n), std::to_string(row.right_special),
                      std::to_string(row.left_special), std::to_string(row.c_n),
                      std::to_string(row.c_next), std::to_string(row.diff), yes_no(row.ok)});
  return t;
}

// ---- branch words, periodic witnesses ----

inline Json report_json(const Labeled<BranchWordSet>& r) {
  return {{"schema", "branch_words"},
          {"n", r.value.level},
          {"count", r.value.count()},
          {"max_length", r.value.max_length()},
          {"depth_limited", r.value.depth_limited},
          {"right", detail::word_list_json(r.alphabet, r.value.right)},
          {"left", detail::word_list_json(r.alphabet, r.value.left)}};
}

inline CsvTable report_table(const Labeled<BranchWordSet>& r) {
  CsvTable t{{"side", "word", "length"}, {}};
  for (const Word& w : r.value.right)
    t.rows.push_back({"right", format_word(r.alphabet, w), std::to_string(w.size())});
  for (const Word& w : r.value.left)
    t.rows.push_back({"left", format_word(r.alphabet, w), std::to_string(w.size())});
  return t;
}

inline Json report_json(const BranchFactsReport& r) {
  return {{"schema", "branch_facts"},
          {"n", r.level},
          {"counts", {{"right", r.right_count}, {"left", r.left_count}, {"bound", r.count_bound}}},
          {"length", {{"max", r.max_length}, {"strict_bound", r.length_bound}}},
          {"count_ok", r.count_ok},
          {"length_ok", r.length_ok},
          {"depth_limited", r.depth_limited},
          {"pass", r.pass}};
}

inline CsvTable report_table(const BranchFactsReport& r) {
  return {{"n", "right", "left", "count_bound", "max_length", "length_bound", "count_ok",
           "length_ok", "depth_limited", "pass"},
          {{std::to_string(r.level), std::to_string(r.right_count), std::to_string(r.left_count),
            std::to_string(r.count_bound), std::to_string(r.max_length),
            std::to_string(r.length_bound), yes_no(r.count_ok), yes_no(r.length_ok),
            yes_no(r.depth_limited), yes_no(r.pass)}}};
}

inline Json report_json(const Labeled<PeriodicWitnessReport>& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.value.witnesses)
    witnesses.push_back({{"word", format_word(r.alphabet, w.word)},
                         {"period", w.period},
                         {"extension", format_word(r.alphabet, w.extension)}});
  Json findings = Json::array();
  for (const auto& f : r.value.findings)
    findings.push_back({{"word", format_word(r.alphabet, f.word)}, {"reason", f.reason}});
  return {{"schema", "periodic_witnesses"},
          {"n", r.value.level},
          {"witnesses", std::move(witnesses)},
          {"findings", std::move(findings)},
          {"depth_limited", r.value.depth_limited},
          {"pass", r.value.certified()}};
}

inline CsvTable report_table(const Labeled<PeriodicWitnessReport>& r) {
  CsvTable t{{"word", "period", "extension", "status"}, {}};
  for (const auto& w : r.value.witnesses)
    t.rows.push_back({format_word(r.alphabet, w.word), std::to_string(w.period),
                      format_word(r.alphabet, w.extension), "certified"});
  for (const auto& f : r.value.findings)
    t.rows.push_back({format_word(r.alphabet, f.word), "", "", f.reason});
  return t;
}

// ---- automorphisms ----

inline Json report_json(const BoundValue& b) {
  return {{"schema", "automorphism_bound"},
          {"value", b.value.str()},
          {"exact", b.certified_exact},
          {"base", b.base.str()},
          {"exponent", b.exponent},
          {"base_level", b.base_level},
          {"c_n", b.c_n},
          {"c_next", b.c_next},
          {"alphabet_size", b.alphabet_size}};
}

inline CsvTable report_table(const BoundValue& b) {
  return {{"value", "exact", "base", "exponent", "base_level"},
          {{b.value.str(), yes_no(b.certified_exact), b.base.str(), std::to_string(b.exponent),
            std::to_string(b.base_level)}}};
}

inline Json report_json(const Labeled<AutCountReport>& r) {
  const auto& o = r.value.options;
  const auto& res = r.value.result;
  Json codes = Json::array();
  for (const auto& c : res.certified) {
    Json entry = detail::code_json(r.alphabet, c.forward);
    entry["status"] = "certified";
    entry["inverse"] = detail::code_json(r.alphabet, c.inverse);
    codes.push_back(std::move(entry));
  }
  for (const auto& c : res.candidates) {
    Json entry = detail::code_json(r.alphabet, c);
    entry["status"] = "candidate";
    codes.push_back(std::move(entry));
  }
  Json periodic = Json::array();
  for (const Word& w : res.fixed_periodic_blocks) periodic.push_back(format_word(r.alphabet, w));
  return {{"schema", "automorphism_count"},
          {"inputs",
           {{"range", o.range},
            {"inverse_range", o.inverse_range},
            {"check_depth", o.check_depth},
            {"fip", o.fip_only}}},
          {"counts",
           {{"certified", res.certified.size()},
            {"candidates", res.candidates.size()},
            {"certified_classes", res.certified_classes},
            {"comparable", res.comparable_count},
            {"nodes", res.nodes}}},
          {"fixed_periodic_blocks", std::move(periodic)},
          {"periodic_depth_limited", res.periodic_depth_limited},
          {"codes", std::move(codes)},
          {"pass", true},
          {"witnesses", Json::array()}};
}

inline CsvTable report_table(const Labeled<AutCountReport>& r) {
  CsvTable t{{"status", "range", "table"}, {}};
  for (const auto& c : r.value.result.certified)
    t.rows.push_back({"certified", std::to_string(c.forward.range()),
                      detail::code_text(r.alphabet, c.forward)});
  for (const auto& c : r.value.result.candidates)
    t.rows.push_back({"candidate", std::to_string(c.range()), detail::code_text(r.alphabet, c)});
  return t;
}

inline Json report_json(const AutbdReport& r) {
  return {{"schema", "automorphism_bound_check"},
          {"inputs",
           {{"n", r.level},
            {"range", r.range},
            {"inverse_range", r.inverse_range},
            {"check_depth", r.check_depth}}},
          {"counts",
           {{"certified", r.certified},
            {"candidates", r.candidates},
            {"certified_classes", r.certified_classes},
            {"comparable", r.comparable_count},
            {"branch_words", r.branch_words},
            {"periodic_witnesses", r.periodic_witnesses},
            {"determination_groups", r.determination_groups}}},
          {"bound",
           {{"value", r.bound.value.str()},
            {"exact", r.bound.certified_exact},
            {"base", r.bound.base.str()},
            {"exponent", r.bound.exponent}}},
          {"count_ok", r.count_ok},
          {"determination_ok", r.determination_ok},
          {"depth_limited", r.depth_limited},
          {"pass", r.pass},
          {"witnesses", r.witnesses}};
}

inline CsvTable report_table(const AutbdReport& r) {
  return {{"n", "range", "comparable", "bound", "exact", "count_ok", "determination_ok",
           "depth_limited", "pass"},
          {{std::to_string(r.level), std::to_string(r.range), std::to_string(r.comparable_count),
            r.bound.value.str(), yes_no(r.bound.certified_exact), yes_no(r.count_ok),
            yes_no(r.determination_ok), yes_no(r.depth_limited), yes_no(r.pass)}}};
}

// ---- construction ----

inline Json report_json(const ChainValidation& v) {
  Json violations = Json::array();
  for (const auto& x : v.violations) violations.push_back({{"check", x.check}, {"detail", x.detail}});
  return {{"schema", "chain_validation"}, {"pass", v.pass}, {"violations", std::move(violations)}};
}

inline CsvTable report_table(const ChainValidation& v) {
  CsvTable t{{"check", "detail"}, {}};
  for (const auto& x : v.violations) t.rows.push_back({x.check, x.detail});
  return t;
}

inline Json report_json(const ConstructionSpec& s) {
  Json levels = Json::array();
  for (std::size_t k = 1; k <= s.top_level(); ++k) {
    const auto& l = s.level(k);
    levels.push_back({{"k", k},
                      {"group", s.group(k).name},
                      {"order", l.order},
                      {"block_length", l.block_length},
                      {"multiplicity", l.multiplicity},
                      {"index", l.index},
                      {"repetition_threshold", l.repetition_threshold},
                      {"coset_representatives", l.coset_reps}});
  }
  return {{"schema", "construction_spec"}, {"levels", std::move(levels)}};
}

inline CsvTable report_table(const ConstructionSpec& s) {
  CsvTable t{{"k", "group", "order", "n_k", "b_k", "q_k", "d_k"}, {}};
  for (std::size_t k = 1; k <= s.top_level(); ++k) {
    const auto& l = s.level(k);
    t.rows.push_back({std::to_string(k), s.group(k).name, std::to_string(l.order),
                      std::to_string(l.block_length), std::to_string(l.multiplicity),
                      std::to_string(l.index), std::to_string(l.repetition_threshold)});
  }
  return t;
}

inline Json report_json(const StructureReport& r) {
  return {{"schema", "construction_structure"},
          {"level", r.level},
          {"checks",
           {{"min", r.minimality},
            {"decomp", r.decomposition},
            {"consist", r.consistency},
            {"not_shift", r.not_shift}}},
          {"runs",
           {{"threshold", r.repetition_threshold},
            {"leading", r.leading_runs},
            {"trailing", r.trailing_runs},
            {"max_interior", r.max_interior_run}}},
          {"pass", r.pass()},
          {"witnesses", r.witnesses}};
}

inline CsvTable report_table(const StructureReport& r) {
  return {{"level", "min", "decomp", "consist", "not_shift", "max_interior_run", "threshold",
           "pass"},
          {{std::to_string(r.level), yes_no(r.minimality), yes_no(r.decomposition),
            yes_no(r.consistency), yes_no(r.not_shift), std::to_string(r.max_interior_run),
            std::to_string(r.repetition_threshold), yes_no(r.pass())}}};
}

inline Json report_json(const IsomorphismReport& r) {
  return {{"schema", "group_action"},
          {"level", r.level},
          {"identities_checked", r.identities_checked},
          {"identities_failed", r.identities_failed},
          {"injective", r.injective},
          {"pass", r.pass()},
          {"witnesses", r.witnesses}};
}

inline CsvTable report_table(const IsomorphismReport& r) {
  return {{"level", "identities_checked", "identities_failed", "injective", "pass"},
          {{std::to_string(r.level), std::to_string(r.identities_checked),
            std::to_string(r.identities_failed), yes_no(r.injective), yes_no(r.pass())}}};
}

inline Json report_json(const AuditReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"n", row.n},
                    {"c_n", row.c_n},
                    {"regime", row.regime},
                    {"bound", row.bound.str()},
                    {"j", row.j},
                    {"j_within", row.j_within},
                    {"ok", row.ok}});
  return {{"schema", "construction_complexity_audit"},
          {"level", r.level},
          {"rows", std::move(rows)},
          {"pass", r.pass}};
}

inline CsvTable report_table(const AuditReport& r) {
  CsvTable t{{"n", "c_n", "regime", "bound", "j", "ok"}, {}};
  for (const auto& row : r.rows)
    t.rows.push_back({std::to_string(row.n), std::to_string(row.c_n), std::to_string(row.regime),
                      row.bound.str(), row.regime == 2 ? std::to_string(row.j) : "",
                      yes_no(row.ok)});
  return t;
}

inline Json report_json(const std::vector<BThreshold>& v) {
  Json rows = Json::array();
  for (const auto& t : v)
    rows.push_back({{"k", t.level},
                    {"threshold", t.threshold.str()},
                    {"least_b", t.least_b ? Json(t.least_b->str()) : Json(nullptr)},
                    {"symbolic", t.symbolic}});
  return {{"schema", "multiplicity_thresholds"}, {"rows", std::move(rows)}};
}

inline CsvTable report_table(const std::vector<BThreshold>& v) {
  CsvTable t{{"k", "threshold", "least_b", "symbolic"}, {}};
  for (const auto& x : v)
    t.rows.push_back({std::to_string(x.level), x.threshold.str(),
                      x.least_b ? x.least_b->str() : "", x.symbolic});
  return t;
}

// ---- thresholds ----

inline Json report_json(const ThresholdReport<double>& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"n", row.n}, {"value", row.value}, {"running_min", row.running_min}});
  return {{"schema", "threshold_indicator"}, {"tag", to_string(r.tag)}, {"rows", std::move(rows)}};
}

inline CsvTable report_table(const ThresholdReport<double>& r) {
  CsvTable t{{"n", "value", "running_min"}, {}};
  for (const auto& row : r.rows)
    t.rows.push_back({std::to_string(row.n), format_real(row.value), format_real(row.running_min)});
  return t;
}

inline Json report_json(const DiffIndicesReport& r) {
  return {{"schema", "difference_indices"},
          {"horizon", r.horizon},
          {"indices", r.indices},
          {"count", r.indices.size()},
          {"pass", !r.indices.empty()}};
}

inline CsvTable report_table(const DiffIndicesReport& r) {
  CsvTable t{{"n"}, {}};
  for (std::size_t n : r.indices) t.rows.push_back({std::to_string(n)});
  return t;
}

template <class Report>
std::string render_report(const Report& report, Format format) {
  if (format == Format::json) return report_json(report).dump(2) + "\n";
  return to_csv(report_table(report));
}

/// Writes the report to `destination`, or to standard output when empty.
template <class Report>
void emit_report(const Report& report, Format format,
                 const std::optional<std::filesystem::path>& destination = std::nullopt) {
  const std::string text = render_report(report, format);
  if (!destination) {
    std::cout << text;
    return;
  }
  std::ofstream out(*destination, std::ios::binary);
  if (!out) throw InputError("cannot write " + destination->string());
  out << text;
}

}  // namespace subshift
