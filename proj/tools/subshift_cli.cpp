// subshift: command-line front end for the library.
// Exit status: 0 pass, 1 verification failure, 2 usage or input error.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "subshift/subshift.hpp"

namespace fs = std::filesystem;
using namespace subshift;

namespace {

struct Globals {
  std::string format;
  std::string out;
  unsigned threads = 1;
  std::uint64_t budget = kDefaultNodeBudget;

  Format resolve(Format fallback) const { return format.empty() ? fallback : parse_format(format); }

  std::optional<fs::path> destination() const {
    if (out.empty()) return std::nullopt;
    return fs::path(out);
  }
};

struct ConstructVerifyReport {
  ChainValidation chain;
  std::vector<StructureReport> structure;
  std::vector<IsomorphismReport> action;

  bool pass() const {
    return chain.pass &&
           std::all_of(structure.begin(), structure.end(), [](auto& s) { return s.pass(); }) &&
           std::all_of(action.begin(), action.end(), [](auto& a) { return a.pass(); });
  }
};

Json report_json(const ConstructVerifyReport& r) {
  Json structure = Json::array();
  for (const auto& s : r.structure) structure.push_back(subshift::report_json(s));
  Json action = Json::array();
  for (const auto& a : r.action) action.push_back(subshift::report_json(a));
  return {{"schema", "construction_verification"},
          {"chain", subshift::report_json(r.chain)},
          {"structure", std::move(structure)},
          {"group_action", std::move(action)},
          {"pass", r.pass()}};
}

CsvTable report_table(const ConstructVerifyReport& r) {
  CsvTable t{{"check", "level", "pass"}, {}};
  t.rows.push_back({"chain", "", yes_no(r.chain.pass)});
  for (const auto& s : r.structure) {
    const std::string k = std::to_string(s.level);
    t.rows.push_back({"min", k, yes_no(s.minimality)});
    t.rows.push_back({"decomp", k, yes_no(s.decomposition)});
    t.rows.push_back({"consist", k, yes_no(s.consistency)});
    t.rows.push_back({"not_shift", k, yes_no(s.not_shift)});
  }
  for (const auto& a : r.action) t.rows.push_back({"group_action", std::to_string(a.level), yes_no(a.pass())});
  return t;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("not an integer: '" + item + "'");
    }
  }
  return out;
}

int status(bool pass) { return pass ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word complexity, branch words, automorphisms and block constructions of subshifts"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out, "Write the report to this path instead of standard output");
  app.add_option("--threads", g.threads, "Worker threads for enumeration")->check(CLI::Range(1u, 256u));
  app.add_option("--budget", g.budget, "Node budget for exhaustive searches");

  std::string source;
  std::size_t depth = 0;
  auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("--source", source, "Subshift source (JSON)")->required();
    cmd->add_option("--depth", depth, "Truncation depth L")->required()->check(CLI::PositiveNumber);
  };
  auto table = [&] { return build_language(load_source(source), depth); };
  int rc = 0;

  auto* complexity = app.add_subcommand("complexity", "c_n and first differences");
  add_source(complexity);
  std::string csv_path;
  complexity->add_option("--csv", csv_path, "Write CSV to this path");
  complexity->callback([&] {
    const ComplexityProfile p = complexity_profile(table());
    if (!csv_path.empty())
      emit_report(p, Format::csv, fs::path(csv_path));
    else
      emit_report(p, g.resolve(Format::csv), g.destination());
  });

  auto* special = app.add_subcommand("special", "Right- or left-special words of length n");
  add_source(special);
  std::size_t n = 1;
  std::string side = "right";
  bool bound_check = false;
  special->add_option("--n", n, "Level n")->required()->check(CLI::PositiveNumber);
  special->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
  special->add_flag("--bound", bound_check, "Check |RS_m|, |LS_m| <= c_{m+1} - c_m for all m <= n");
  special->callback([&] {
    const LanguageTable t = table();
    if (bound_check) {
      const SpecialBoundReport r = verify_special_bound(t, n);
      emit_report(r, g.resolve(Format::csv), g.destination());
      rc = status(r.pass);
      return;
    }
    const Side s = side == "left" ? Side::left : Side::right;
    const SpecialWordsReport r{n, s, special_words(t, n, s)};
    emit_report(labeled(r, t.alphabet()), g.resolve(Format::csv), g.destination());
  });

  auto* branch = app.add_subcommand("branch", "n-branch words, their count and length bounds, periodic witnesses");
  add_source(branch);
  bool facts = false, periodic = false;
  branch->add_option("--n", n, "Level n")->required()->check(CLI::PositiveNumber);
  branch->add_flag("--facts", facts, "Check the count and length bounds");
  branch->add_flag("--periodic", periodic, "List uncovered words with their periodic certificates");
  branch->callback([&] {
    const LanguageTable t = table();
    if (facts) {
      const BranchFactsReport r = verify_branch_facts(t, n);
      emit_report(r, g.resolve(Format::json), g.destination());
      rc = status(r.pass);
    } else if (periodic) {
      const PeriodicWitnessReport r = periodic_witnesses(t, n);
      emit_report(labeled(r, t.alphabet()), g.resolve(Format::csv), g.destination());
      rc = status(r.certified());
    } else {
      emit_report(labeled(branch_words(t, n), t.alphabet()), g.resolve(Format::csv), g.destination());
    }
  });

  auto* autcount = app.add_subcommand("autcount", "Enumerate sliding block codes of bounded range");
  add_source(autcount);
  EnumerationOptions opts;
  autcount->add_option("--range", opts.range, "Code range r")->required();
  autcount->add_option("--inv-range", opts.inverse_range, "Inverse range cap R")->required();
  autcount->add_option("--check-depth", opts.check_depth, "Round-trip depth M")->required();
  autcount->add_flag("--fip", opts.fip_only, "Require isolated periodic points to be fixed");
  autcount->callback([&] {
    const LanguageTable t = table();
    opts.node_budget = g.budget;
    opts.threads = g.threads;
    const AutCountReport r{opts, enumerate_automorphisms(t, opts)};
    emit_report(labeled(r, t.alphabet()), g.resolve(Format::csv), g.destination());
  });

  auto* verify_autbd_cmd = app.add_subcommand("verify-autbd", "Compare the FIP code count with the automorphism bound");
  add_source(verify_autbd_cmd);
  std::optional<std::size_t> inverse_range, check_depth;
  verify_autbd_cmd->add_option("--n", n, "Level n")->required()->check(CLI::PositiveNumber);
  verify_autbd_cmd->add_option("--inv-range", inverse_range, "Inverse range cap R (default floor((n-1)/2))");
  verify_autbd_cmd->add_option("--check-depth", check_depth, "Round-trip depth M (default 2(r+R)+5, capped by depth)");
  verify_autbd_cmd->callback([&] {
    const LanguageTable t = table();
    const std::size_t r = (n - 1) / 2;
    const std::size_t inv = inverse_range.value_or(r);
    const std::size_t m = check_depth.value_or(std::min(depth, 2 * (r + inv) + 5));
    const AutbdReport rep = verify_autbd(t, n, inv, m, g.budget, g.threads);
    emit_report(rep, g.resolve(Format::json), g.destination());
    rc = status(rep.pass);
  });

  std::string chain_path;
  std::size_t level = 1;
  auto* construct = app.add_subcommand("construct", "Derive the block construction and emit A_K");
  std::string emit_path;
  construct->add_option("--chain", chain_path, "Group chain (JSON)")->required();
  construct->add_option("--level", level, "Level K")->required()->check(CLI::PositiveNumber);
  construct->add_option("--emit", emit_path, "Write the A_K words here, one per line");
  construct->callback([&] {
    const ConstructionSpec spec = load_construction_spec(chain_path);
    const AkWordFamily family = build_Ak(spec, level);
    if (!emit_path.empty()) {
      std::ofstream out(emit_path);
      if (!out) throw InputError("cannot write " + emit_path);
      const Alphabet symbols = Alphabet::numeric(spec.level(1).order);
      for (const Word& w : family.words()) out << format_word(symbols, w) << '\n';
    }
    emit_report(spec, g.resolve(Format::csv), g.destination());
  });

  auto* construct_verify = app.add_subcommand("construct-verify", "Structural checks of the construction up to level K");
  construct_verify->add_option("--chain", chain_path, "Group chain (JSON)")->required();
  construct_verify->add_option("--level", level, "Level K")->required()->check(CLI::PositiveNumber);
  construct_verify->callback([&] {
    const Json j = read_json_file(chain_path);
    ConstructVerifyReport r;
    r.chain = validate_chain(chain_from_json(j));
    if (r.chain.pass) {
      const ConstructionSpec spec = derive_spec(chain_from_json(j), multiplicities_from_json(j));
      if (level > spec.top_level())
        throw InputError("level " + std::to_string(level) + " exceeds the chain length");
      for (std::size_t k = 1; k < level; ++k) r.structure.push_back(verify_structure(spec, k));
      for (std::size_t k = 1; k <= level; ++k) r.action.push_back(group_isomorphism_check(spec, k));
    }
    emit_report(r, g.resolve(Format::json), g.destination());
    rc = status(r.pass());
  });

  auto* construct_audit = app.add_subcommand("construct-audit", "Compare c_n with the counting bounds on [n_k, n_{k+1})");
  std::optional<std::size_t> language_level;
  construct_audit->add_option("--chain", chain_path, "Group chain (JSON)")->required();
  construct_audit->add_option("--level", level, "Level k")->required()->check(CLI::PositiveNumber);
  construct_audit->add_option("--depth", depth, "Truncation depth L")->required()->check(CLI::PositiveNumber);
  construct_audit->add_option("--language-level", language_level, "Level K of the generating family (default k+1)");
  construct_audit->callback([&] {
    auto spec = std::make_shared<const ConstructionSpec>(load_construction_spec(chain_path));
    const LanguageTable t =
        build_language(ConstructionSource{spec, language_level.value_or(level + 1)}, depth);
    const AuditReport r = construction_complexity_audit(*spec, t, level);
    emit_report(r, g.resolve(Format::csv), g.destination());
    rc = status(r.pass);
  });

  auto* b_thresholds = app.add_subcommand("b-thresholds", "Thresholds T_k that f(b_k) must exceed");
  std::string growth = "n";
  b_thresholds->add_option("--chain", chain_path, "Group chain (JSON)")->required();
  b_thresholds->add_option("--f", growth, "n, log2, sqrt, or a comma-separated table f(1),f(2),...");
  b_thresholds->callback([&] {
    const GroupChain chain = chain_from_json(read_json_file(chain_path));
    GrowthFunction f;
    if (growth.find(',') != std::string::npos) {
      std::vector<std::uint64_t> values;
      for (std::int64_t v : parse_int_list(growth)) {
        if (v < 0) throw InputError("growth values must be non-negative");
        values.push_back(static_cast<std::uint64_t>(v));
      }
      f = GrowthFunction::tabulated(std::move(values));
    } else {
      f = GrowthFunction::named(growth);
    }
    emit_report(required_b_lower_bounds(chain, f), g.resolve(Format::csv), g.destination());
  });

  auto* thresholds = app.add_subcommand("thresholds", "Growth-rate indicator and its running minimum");
  add_source(thresholds);
  std::string tag;
  thresholds->add_option("--tag", tag, "log-ratio, n1.25, n1.5 or n2")->required();
  thresholds->callback([&] {
    const ComplexityProfile p = complexity_profile(table());
    emit_report(threshold_stats<double>(p, parse_indicator(tag)), g.resolve(Format::csv), g.destination());
  });

  auto* diff = app.add_subcommand("diff-indices", "Indices n with f(n) < g(1)+...+g(n) and f(n)-f(n-1) < g(n)");
  std::string f_text, g_text;
  std::optional<std::size_t> horizon;
  diff->add_option("--f", f_text, "f(1),f(2),...")->required();
  diff->add_option("--g", g_text, "g(1),g(2),...")->required();
  diff->add_option("--horizon", horizon, "Horizon H (default: sequence length)");
  diff->callback([&] {
    const auto f = parse_int_list(f_text);
    const auto gs = parse_int_list(g_text);
    const std::size_t h = horizon.value_or(f.size());
    const DiffIndicesReport r{h, find_diff_indices(f, gs, h)};
    emit_report(r, g.resolve(Format::csv), g.destination());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (" << e.partial_results() << " partial results)\n";
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
