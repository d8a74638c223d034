#pragma once

// JSON input: subshift sources and group chains.
//
//   {"kind": "sft", "alphabet": ["0","1"], "forbidden": ["11"]}
//   {"kind": "substitution", "alphabet": ["a","b"], "rules": {"a": "ab", "b": "a"}, "seed": "a"}
//   {"kind": "seeds", "alphabet": ["0","1"], "seeds": ["0110100110010110"]}
//   {"kind": "construction", "spec": "chain.json", "level": 2}
//
// A substitution without "alphabet" takes its symbols from the rule keys.
//
// Chains: {"groups": [{"name": "Z2", "cayley": [[0,1],[1,0]]}, {"cyclic": 4}],
//          "embeddings": [[0,2]], "b": [2]}

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "subshift/construction.hpp"
#include "subshift/error.hpp"
#include "subshift/group.hpp"
#include "subshift/language.hpp"
#include "subshift/word.hpp"

namespace subshift {

using Json = nlohmann::json;

/// Words are strings of single-character names, or whitespace-separated
/// names when some name is longer.
inline Word parse_word_text(const Alphabet& alphabet, std::string_view text) {
  if (alphabet.single_char_names()) return parse_word(alphabet, text);
  Word w;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    auto s = alphabet.find(token);
    if (!s) throw InputError("symbol '" + token + "' not in alphabet");
    w.push_back(*s);
  }
  return w;
}

inline Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

namespace detail {

template <class T>
T json_get(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw InputError(std::string("field '") + key + "': " + e.what());
  }
}

inline Alphabet alphabet_from_json(const Json& j) {
  return Alphabet(json_get<std::vector<std::string>>(j, "alphabet"));
}

inline std::vector<Word> words_from_json(const Alphabet& alphabet, const Json& j,
                                         const char* key) {
  std::vector<Word> out;
  for (const auto& text : json_get<std::vector<std::string>>(j, key))
    out.push_back(parse_word_text(alphabet, text));
  return out;
}

}  // namespace detail

inline GroupChain chain_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("chain must be a JSON object");
  GroupChain chain;
  if (!j.contains("groups") || !j.at("groups").is_array())
    throw InputError("chain needs a 'groups' array");
  for (const Json& g : j.at("groups")) {
    if (g.contains("cyclic")) {
      chain.groups.push_back(cyclic_group(detail::json_get<std::size_t>(g, "cyclic")));
      continue;
    }
    FiniteGroup group;
    group.name = g.value("name", "H" + std::to_string(chain.groups.size() + 1));
    group.cayley = detail::json_get<std::vector<std::vector<std::size_t>>>(g, "cayley");
    chain.groups.push_back(std::move(group));
  }
  chain.embeddings =
      j.contains("embeddings")
          ? detail::json_get<std::vector<std::vector<std::size_t>>>(j, "embeddings")
          : std::vector<std::vector<std::size_t>>{};
  return chain;
}

inline std::vector<std::uint64_t> multiplicities_from_json(const Json& j) {
  return j.contains("b") ? detail::json_get<std::vector<std::uint64_t>>(j, "b")
                         : std::vector<std::uint64_t>{};
}

/// Chain file with its multiplicities b_2..b_K, turned into derived data.
inline ConstructionSpec load_construction_spec(const std::filesystem::path& path) {
  const Json j = read_json_file(path);
  return derive_spec(chain_from_json(j), multiplicities_from_json(j));
}

/// Relative chain paths resolve against `base_dir`.
inline SubshiftSource source_from_json(const Json& j, const std::filesystem::path& base_dir = {}) {
  if (!j.is_object()) throw InputError("source must be a JSON object");
  const auto kind = detail::json_get<std::string>(j, "kind");
  if (kind == "sft") {
    Alphabet a = detail::alphabet_from_json(j);
    auto forbidden = detail::words_from_json(a, j, "forbidden");
    return SftSource{std::move(a), std::move(forbidden)};
  }
  if (kind == "substitution") {
    const Json& rules = j.contains("rules") ? j.at("rules") : Json();
    if (!rules.is_object()) throw InputError("substitution needs a 'rules' object");
    std::vector<std::string> keys;
    for (const auto& item : rules.items()) keys.push_back(item.key());
    SubstitutionSource src{j.contains("alphabet") ? detail::alphabet_from_json(j) : Alphabet(keys),
                           {}, 0};
    src.rules.resize(src.alphabet.size());
    std::vector<bool> given(src.alphabet.size(), false);
    for (const auto& [name, image] : rules.items()) {
      auto s = src.alphabet.find(name);
      if (!s) throw InputError("rule for unknown symbol '" + name + "'");
      if (!image.is_string()) throw InputError("rule image for '" + name + "' must be a string");
      src.rules[*s] = parse_word_text(src.alphabet, image.get<std::string>());
      given[*s] = true;
    }
    for (std::size_t s = 0; s < given.size(); ++s)
      if (!given[s]) throw InputError("no rule for symbol '" + src.alphabet.names()[s] + "'");
    const auto seed_name = j.value("seed", src.alphabet.names().front());
    auto seed = src.alphabet.find(seed_name);
    if (!seed) throw InputError("seed '" + seed_name + "' not in alphabet");
    src.seed = *seed;
    src.max_iterations = j.value("max_iterations", src.max_iterations);
    src.max_length = j.value("max_length", src.max_length);
    return src;
  }
  if (kind == "seeds") {
    Alphabet a = detail::alphabet_from_json(j);
    auto seeds = detail::words_from_json(a, j, "seeds");
    return SeedsSource{std::move(a), std::move(seeds)};
  }
  if (kind == "construction") {
    const char* key = j.contains("spec") ? "spec" : "chain";
    if (!j.contains(key)) throw InputError("construction source needs 'spec'");
    const Json& chain = j.at(key);
    ConstructionSpec spec;
    if (chain.is_string()) {
      std::filesystem::path p = chain.get<std::string>();
      if (p.is_relative()) p = base_dir / p;
      spec = load_construction_spec(p);
    } else {
      spec = derive_spec(chain_from_json(chain), multiplicities_from_json(chain));
    }
    const auto level = j.value("level", spec.top_level());
    return ConstructionSource{std::make_shared<const ConstructionSpec>(std::move(spec)), level};
  }
  throw InputError("unknown source kind '" + kind + "'");
}

inline SubshiftSource load_source(const std::filesystem::path& path) {
  return source_from_json(read_json_file(path), path.parent_path());
}

}  // namespace subshift
