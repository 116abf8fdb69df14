// Copyright 2026 The Nameblind Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Builds collision-free rename maps for the selected name categories and
// applies them to token streams. Two strategies:
//
//   RandomGenerated — fresh meaningless names, either seeded random strings
//   ("oe4yqk4cit2maq7t" style) or sequential var1../fun1.. placeholders;
//
//   Shuffling — replacements drawn from the corpus-wide pool of real names of
//   the same category, so identifiers become misleading rather than nonsense.
//
// Every map is injective, avoids keywords, builtins, and any identifier that
// remains in the snippet, and is a deterministic function of its inputs.

#ifndef NAMEBLIND_ANONYMIZER_HPP_
#define NAMEBLIND_ANONYMIZER_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nameblind/errors.hpp"
#include "nameblind/lexer.hpp"
#include "nameblind/name_analysis.hpp"
#include "nameblind/rng.hpp"
#include "nameblind/token.hpp"

namespace nameblind {

enum class Strategy { kRandomGenerated, kShuffling };
enum class NamingScheme { kRandomString, kSequential };

inline std::string_view to_string(Strategy strategy) {
  return strategy == Strategy::kRandomGenerated ? "random" : "shuffle";
}
inline std::string_view to_string(NamingScheme scheme) {
  return scheme == NamingScheme::kRandomString ? "random-string" : "sequential";
}

// Nonempty subset of the three renameable categories.
struct CategorySet {
  bool variables = false;
  bool definitions = false;
  bool invocations = false;

  static CategorySet all() { return {true, true, true}; }

  bool empty() const { return !variables && !definitions && !invocations; }
  bool contains(NameCategory category) const {
    switch (category) {
      case NameCategory::kVariable: return variables;
      case NameCategory::kDefinition: return definitions;
      case NameCategory::kInvocation: return invocations;
      case NameCategory::kPreserved: return false;
    }
    return false;
  }
  bool operator==(const CategorySet&) const = default;

  // Comma-separated list of var/def/inv, e.g. "var,inv".
  static std::optional<CategorySet> parse(std::string_view spec) {
    CategorySet set;
    std::size_t start = 0;
    while (start <= spec.size()) {
      std::size_t comma = spec.find(',', start);
      std::string_view item = spec.substr(
          start, comma == std::string_view::npos ? spec.size() - start
                                                 : comma - start);
      if (item == "var" || item == "variable" || item == "variables") {
        set.variables = true;
      } else if (item == "def" || item == "definition" || item == "definitions") {
        set.definitions = true;
      } else if (item == "inv" || item == "invocation" || item == "invocations") {
        set.invocations = true;
      } else if (!item.empty()) {
        return std::nullopt;
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (set.empty()) return std::nullopt;
    return set;
  }

  std::string to_string() const {
    std::string out;
    if (variables) out += "var";
    if (definitions) out += out.empty() ? "def" : ",def";
    if (invocations) out += out.empty() ? "inv" : ",inv";
    return out;
  }
};

// Per-snippet injective mapping (category, original) -> replacement.
struct RenameMap {
  std::map<std::pair<NameCategory, std::string>, std::string> entries;
  std::uint64_t seed = 0;
  // Global-permutation draws that had to probe past a colliding image.
  std::size_t pool_fallbacks = 0;

  const std::string* find(NameCategory category, const std::string& name) const {
    auto it = entries.find({category, name});
    return it == entries.end() ? nullptr : &it->second;
  }
  std::size_t count(NameCategory category) const {
    std::size_t n = 0;
    for (const auto& [key, value] : entries) n += key.first == category;
    return n;
  }
};

// Corpus-wide distinct names per (language, category); the sampling source
// for the shuffling strategy. Counts record in how many snippets each name
// occurred. Build it fully before sharing; mutation is not thread-safe.
class NamePool {
 public:
  using Bucket = std::map<std::string, std::size_t>;

  void add_inventory(SourceLanguage language, const NameInventory& inventory) {
    for (const std::string& name : inventory.variables) {
      ++bucket(language, NameCategory::kVariable)[name];
    }
    for (const std::string& name : inventory.definitions) {
      ++bucket(language, NameCategory::kDefinition)[name];
    }
    for (const std::string& name : inventory.invocations) {
      ++bucket(language, NameCategory::kInvocation)[name];
    }
  }

  Bucket& bucket(SourceLanguage language, NameCategory category) {
    sorted_[index(language)][index(category)].reset();
    return buckets_[index(language)][index(category)];
  }
  const Bucket& bucket(SourceLanguage language, NameCategory category) const {
    return buckets_[index(language)][index(category)];
  }

  std::size_t distinct(SourceLanguage language, NameCategory category) const {
    return bucket(language, category).size();
  }

  // Deterministic (sorted) name list, the basis for every seeded draw.
  // Cached so per-record draws never copy the pool.
  const std::vector<std::string>& sorted_names(SourceLanguage language,
                                               NameCategory category) const {
    std::optional<std::vector<std::string>>& cache =
        sorted_[index(language)][index(category)];
    if (!cache.has_value()) {
      const Bucket& b = bucket(language, category);
      std::vector<std::string> names;
      names.reserve(b.size());
      for (const auto& [name, count] : b) names.push_back(name);
      cache = std::move(names);
    }
    return *cache;
  }

 private:
  static std::size_t index(SourceLanguage language) {
    return language == SourceLanguage::kJava ? 0 : 1;
  }
  static std::size_t index(NameCategory category) {
    switch (category) {
      case NameCategory::kVariable: return 0;
      case NameCategory::kDefinition: return 1;
      case NameCategory::kInvocation: return 2;
      case NameCategory::kPreserved: break;
    }
    return 0;
  }

  Bucket buckets_[2][3];
  mutable std::optional<std::vector<std::string>> sorted_[2][3];
};

// Pool over in-memory snippets; corpus files go through corpus.hpp instead.
inline NamePool extract_pool(const std::vector<std::string>& sources,
                             SourceLanguage language) {
  NamePool pool;
  for (const std::string& source : sources) {
    pool.add_inventory(language, classify_names(tokenize(source, language)));
  }
  return pool;
}

// One corpus-wide bijection per (language, category): every pool name is
// used exactly once across the corpus. Alternative reading of "shuffling";
// see the --global-permutation flag.
class GlobalPermutation {
 public:
  static GlobalPermutation build(const NamePool& pool, std::uint64_t seed) {
    GlobalPermutation perm;
    for (SourceLanguage language :
         {SourceLanguage::kJava, SourceLanguage::kPython}) {
      for (NameCategory category :
           {NameCategory::kVariable, NameCategory::kDefinition,
            NameCategory::kInvocation}) {
        Entry& entry = perm.entry(language, category);
        std::vector<std::string> names = pool.sorted_names(language, category);
        if (names.empty()) continue;
        std::string key = std::string("perm/") +
                          std::string(nameblind::to_string(language)) + "/" +
                          std::string(nameblind::to_string(category));
        // Retry toward a derangement; keep the last shuffle if none found.
        std::vector<std::string> images;
        for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
          SplitMix64 rng(derive_seed(seed, key + "#" + std::to_string(attempt)));
          images = names;
          seeded_shuffle(images, rng);
          bool fixpoint = false;
          if (names.size() >= 2) {
            for (std::size_t i = 0; i < names.size(); ++i) {
              if (names[i] == images[i]) {
                fixpoint = true;
                break;
              }
            }
          }
          if (!fixpoint) break;
        }
        entry.images = images;
        for (std::size_t i = 0; i < names.size(); ++i) {
          entry.map[names[i]] = images[i];
          entry.position[images[i]] = i;
        }
      }
    }
    return perm;
  }

  struct Entry {
    std::map<std::string, std::string> map;
    std::map<std::string, std::size_t> position;  // image -> index
    std::vector<std::string> images;
  };

  Entry& entry(SourceLanguage language, NameCategory category) {
    return entries_[language == SourceLanguage::kJava ? 0 : 1]
                   [category == NameCategory::kVariable     ? 0
                    : category == NameCategory::kDefinition ? 1
                                                            : 2];
  }
  const Entry& entry(SourceLanguage language, NameCategory category) const {
    return const_cast<GlobalPermutation*>(this)->entry(language, category);
  }

 private:
  Entry entries_[2][3];
};

struct RenameOptions {
  std::size_t random_name_length = 16;
  const GlobalPermutation* global_permutation = nullptr;
};

namespace detail {

inline std::string random_identifier(SplitMix64& rng, std::size_t length) {
  static constexpr std::string_view kFirst = "abcdefghijklmnopqrstuvwxyz";
  static constexpr std::string_view kRest = "abcdefghijklmnopqrstuvwxyz0123456789";
  std::string name;
  name.reserve(length);
  name += kFirst[static_cast<std::size_t>(rng.below(kFirst.size()))];
  while (name.size() < length) {
    name += kRest[static_cast<std::size_t>(rng.below(kRest.size()))];
  }
  return name;
}

class ReplacementValidator {
 public:
  ReplacementValidator(SourceLanguage language,
                       const std::set<std::string>& names_outside_domain)
      : language_(language), outside_(names_outside_domain) {}

  bool ok(const std::string& candidate, const std::string& original,
          bool allow_identity, const std::set<std::string>& used) const {
    if (!allow_identity && candidate == original) return false;
    if (used.count(candidate) > 0) return false;
    if (outside_.count(candidate) > 0) return false;
    if (is_keyword(candidate, language_)) return false;
    if (detail::is_builtin_name(candidate, language_)) return false;
    return true;
  }

 private:
  SourceLanguage language_;
  const std::set<std::string>& outside_;
};

}  // namespace detail

// Builds the rename map for `categories` over `inventory`. `pool` must be
// present exactly when strategy is Shuffling. Throws InvalidConfigError on a
// bad combination and PoolExhaustedError when no collision-free assignment
// exists.
inline RenameMap build_rename_map(const NameInventory& inventory,
                                  SourceLanguage language,
                                  CategorySet categories, Strategy strategy,
                                  NamingScheme scheme, std::uint64_t seed,
                                  const NamePool* pool = nullptr,
                                  const RenameOptions& options = {}) {
  if (categories.empty()) {
    throw InvalidConfigError("category set must be nonempty");
  }
  if (strategy == Strategy::kShuffling && pool == nullptr) {
    throw InvalidConfigError("shuffling requires a name pool");
  }
  if (strategy == Strategy::kRandomGenerated && pool != nullptr) {
    throw InvalidConfigError("a name pool is only meaningful for shuffling");
  }
  if (options.global_permutation != nullptr &&
      strategy != Strategy::kShuffling) {
    throw InvalidConfigError("global permutation requires shuffling");
  }

  // Domain in first-occurrence order; the order seeds sequential numbering.
  std::vector<std::pair<NameCategory, std::string>> domain;
  std::set<std::string> domain_names;
  std::set<std::string> snippet_names;
  for (const NameOccurrence& occ : inventory.occurrences) {
    snippet_names.insert(occ.name);
    if (occ.qualified || occ.category == NameCategory::kPreserved) continue;
    if (!categories.contains(occ.category)) continue;
    if (domain_names.insert(occ.name).second) {
      domain.emplace_back(occ.category, occ.name);
    }
  }

  std::set<std::string> outside_domain;
  for (const std::string& name : snippet_names) {
    if (domain_names.count(name) == 0) outside_domain.insert(name);
  }
  detail::ReplacementValidator validator(language, outside_domain);

  RenameMap map;
  map.seed = seed;
  std::set<std::string> used;

  if (strategy == Strategy::kRandomGenerated &&
      scheme == NamingScheme::kSequential) {
    std::size_t var_counter = 1, fun_counter = 1;
    for (const auto& [category, name] : domain) {
      bool is_var = category == NameCategory::kVariable;
      std::size_t& counter = is_var ? var_counter : fun_counter;
      std::string candidate;
      do {
        candidate = (is_var ? "var" : "fun") + std::to_string(counter++);
      } while (!validator.ok(candidate, name, false, used));
      used.insert(candidate);
      map.entries[{category, name}] = candidate;
    }
    return map;
  }

  if (strategy == Strategy::kRandomGenerated) {
    SplitMix64 rng(seed);
    for (const auto& [category, name] : domain) {
      std::size_t length = options.random_name_length;
      std::string candidate;
      for (std::size_t tries = 0;; ++tries) {
        candidate = detail::random_identifier(rng, length);
        if (validator.ok(candidate, name, false, used)) break;
        if (tries >= 64) {
          ++length;
          tries = 0;
        }
      }
      used.insert(candidate);
      map.entries[{category, name}] = candidate;
    }
    return map;
  }

  // Shuffling with a corpus-wide permutation shared by all records.
  if (options.global_permutation != nullptr) {
    for (const auto& [category, name] : domain) {
      const GlobalPermutation::Entry& entry =
          options.global_permutation->entry(language, category);
      auto it = entry.map.find(name);
      if (it == entry.map.end()) {
        throw PoolExhaustedError("'" + name + "' is not in the corpus pool");
      }
      std::string candidate = it->second;
      if (!validator.ok(candidate, name, entry.map.size() < 2, used)) {
        // The bijection image collides inside this snippet; probe forward.
        std::size_t start = entry.position.at(candidate);
        bool found = false;
        for (std::size_t step = 1; step <= entry.images.size(); ++step) {
          const std::string& probe =
              entry.images[(start + step) % entry.images.size()];
          if (validator.ok(probe, name, false, used)) {
            candidate = probe;
            found = true;
            break;
          }
        }
        if (!found) {
          throw PoolExhaustedError("no usable replacement for '" + name + "'");
        }
        ++map.pool_fallbacks;
      }
      used.insert(candidate);
      map.entries[{category, name}] = candidate;
    }
    return map;
  }

  // Shuffling with an independent seeded draw per snippet. Small pools scan
  // a freshly shuffled copy so exhaustion is exact; large pools draw
  // candidates by seeded index probing, which never copies the pool.
  constexpr std::size_t kExhaustiveScanLimit = 64;
  constexpr std::size_t kProbeBudget = 256;
  for (const auto& [category, name] : domain) {
    if (pool->sorted_names(language, category).empty()) {
      throw PoolExhaustedError(std::string("empty pool for category ") +
                               std::string(nameblind::to_string(category)));
    }
  }

  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    SplitMix64 rng(derive_seed(seed, "shuffle#" + std::to_string(attempt)));
    used.clear();
    map.entries.clear();

    bool complete = true;
    for (const auto& [category, name] : domain) {
      const std::vector<std::string>& names = pool->sorted_names(language, category);
      bool allow_identity = names.size() < 2;
      bool found = false;
      if (names.size() <= kExhaustiveScanLimit) {
        std::vector<std::string> order = names;
        seeded_shuffle(order, rng);
        for (const std::string& candidate : order) {
          if (validator.ok(candidate, name, allow_identity, used)) {
            used.insert(candidate);
            map.entries[{category, name}] = candidate;
            found = true;
            break;
          }
        }
      } else {
        for (std::size_t draw = 0; draw < kProbeBudget; ++draw) {
          const std::string& candidate =
              names[static_cast<std::size_t>(rng.below(names.size()))];
          if (validator.ok(candidate, name, allow_identity, used)) {
            used.insert(candidate);
            map.entries[{category, name}] = candidate;
            found = true;
            break;
          }
        }
      }
      if (!found) {
        complete = false;
        break;
      }
    }
    if (complete) return map;
  }
  throw PoolExhaustedError(
      "no collision-free shuffle assignment after 64 attempts");
}

// Rewrites `stream` under `map`: identifier texts change where the
// occurrence's (category, name) is mapped; kinds, counts and every other
// byte stay put. Throws InconsistentInventoryError if `inventory` does not
// describe `stream`.
inline TokenStream apply_renames(const TokenStream& stream,
                                 const RenameMap& map,
                                 const NameInventory& inventory) {
  std::size_t identifier_count = 0;
  for (const Token& token : stream.tokens) {
    identifier_count += token.kind == TokenKind::kIdentifier;
  }
  if (identifier_count != inventory.occurrences.size()) {
    throw InconsistentInventoryError(
        "occurrence count " + std::to_string(inventory.occurrences.size()) +
        " vs identifier tokens " + std::to_string(identifier_count));
  }

  TokenStream out;
  out.language = stream.language;
  out.tokens = stream.tokens;
  for (const NameOccurrence& occ : inventory.occurrences) {
    if (occ.token_index >= out.tokens.size()) {
      throw InconsistentInventoryError("token index out of range");
    }
    Token& token = out.tokens[occ.token_index];
    if (token.kind != TokenKind::kIdentifier || token.text != occ.name) {
      throw InconsistentInventoryError("occurrence does not match token " +
                                       std::to_string(occ.token_index));
    }
    if (occ.qualified || occ.category == NameCategory::kPreserved) continue;
    if (const std::string* replacement = map.find(occ.category, occ.name)) {
      token.text = *replacement;
    }
  }

  std::size_t offset = 0;
  std::string source;
  for (Token& token : out.tokens) {
    token.begin = offset;
    offset += token.text.size();
    token.end = offset;
    source += token.text;
  }
  out.source = std::move(source);
  return out;
}

// Occurrence counts actually rewritten per original name.
inline std::map<std::string, std::size_t> count_renamed_occurrences(
    const NameInventory& inventory, const RenameMap& map) {
  std::map<std::string, std::size_t> counts;
  for (const NameOccurrence& occ : inventory.occurrences) {
    if (occ.qualified || occ.category == NameCategory::kPreserved) continue;
    if (map.find(occ.category, occ.name) != nullptr) ++counts[occ.name];
  }
  return counts;
}

// Full single-snippet pipeline: tokenize, classify, build the map, rewrite.
inline std::string anonymize_snippet(std::string_view source,
                                     SourceLanguage language,
                                     CategorySet categories, Strategy strategy,
                                     NamingScheme scheme, std::uint64_t seed,
                                     const NamePool* pool = nullptr,
                                     const RenameOptions& options = {}) {
  TokenStream stream = tokenize(source, language);
  NameInventory inventory = classify_names(stream);
  RenameMap map = build_rename_map(inventory, language, categories, strategy,
                                   scheme, seed, pool, options);
  return detokenize(apply_renames(stream, map, inventory));
}

}  // namespace nameblind

#endif  // NAMEBLIND_ANONYMIZER_HPP_
