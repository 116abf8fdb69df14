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
// Corpus ingestion and variant construction. Reads code-search corpora
// (JSONL, one object per line with code/code_tokens/docstring_tokens/
// language) and clone-detection corpora (functions JSONL plus
// `idx1 idx2 label` pair lines), and rewrites them into any cell of the
// d1..d16 variant matrix: task x anonymized-category set x strategy.
//
// Output lines are produced by splicing the new code into the original line
// bytes, so every field we do not rewrite is preserved byte for byte.

#ifndef NAMEBLIND_CORPUS_HPP_
#define NAMEBLIND_CORPUS_HPP_

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nameblind/anonymizer.hpp"
#include "nameblind/errors.hpp"
#include "nameblind/jsonl.hpp"
#include "nameblind/lexer.hpp"
#include "nameblind/name_analysis.hpp"
#include "nameblind/rng.hpp"

namespace nameblind {

enum class Task { kCodeSearch, kCloneDetection };

inline std::string_view to_string(Task task) {
  return task == Task::kCodeSearch ? "code-search" : "clone-detection";
}

enum class ErrorPolicy { kStrict, kLenient };

struct CodeSearchRecord {
  std::string line;  // original raw bytes, the splice base
  std::size_t line_number = 0;
  std::string id;
  SourceLanguage language = SourceLanguage::kPython;
  std::string code;
  std::vector<std::string> code_tokens;
  std::vector<std::string> docstring_tokens;
};

struct CloneFunctionRecord {
  std::string line;
  std::size_t line_number = 0;
  std::string idx;
  std::string func;
};

struct ClonePairRecord {
  std::string idx1;
  std::string idx2;
  int label = 0;
};

namespace detail {

inline std::vector<std::string> string_array_field(const nlohmann::json& object,
                                                   std::string_view key,
                                                   std::size_t line_number) {
  auto it = object.find(key);
  if (it == object.end() || !it->is_array()) {
    throw FormatError(line_number,
                      "missing or non-array \"" + std::string(key) + "\"");
  }
  std::vector<std::string> out;
  out.reserve(it->size());
  for (const auto& element : *it) {
    if (!element.is_string()) {
      throw FormatError(line_number,
                        "non-string element in \"" + std::string(key) + "\"");
    }
    out.push_back(element.get<std::string>());
  }
  return out;
}

inline std::string string_field(const nlohmann::json& object,
                                std::string_view key, std::size_t line_number) {
  auto it = object.find(key);
  if (it == object.end() || !it->is_string()) {
    throw FormatError(line_number,
                      "missing or non-string \"" + std::string(key) + "\"");
  }
  return it->get<std::string>();
}

}  // namespace detail

// Parses one code-search line. Throws FormatError on malformed input.
inline CodeSearchRecord parse_code_search_record(std::string line,
                                                 std::size_t line_number) {
  nlohmann::json object;
  try {
    object = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(line_number, e.what());
  }
  if (!object.is_object()) throw FormatError(line_number, "not a JSON object");

  CodeSearchRecord record;
  record.line_number = line_number;
  record.code = detail::string_field(object, "code", line_number);
  record.code_tokens =
      detail::string_array_field(object, "code_tokens", line_number);
  record.docstring_tokens =
      detail::string_array_field(object, "docstring_tokens", line_number);
  std::string language = detail::string_field(object, "language", line_number);
  std::optional<SourceLanguage> parsed = parse_language(language);
  if (!parsed.has_value()) {
    throw FormatError(line_number, "unsupported language \"" + language + "\"");
  }
  record.language = *parsed;
  if (object.contains("url") && object["url"].is_string()) {
    record.id = object["url"].get<std::string>();
  } else if (object.contains("func_name") && object["func_name"].is_string()) {
    record.id = object["func_name"].get<std::string>();
  } else {
    record.id = "line:" + std::to_string(line_number);
  }
  record.line = std::move(line);
  return record;
}

inline CloneFunctionRecord parse_clone_function_record(std::string line,
                                                       std::size_t line_number) {
  nlohmann::json object;
  try {
    object = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(line_number, e.what());
  }
  if (!object.is_object()) throw FormatError(line_number, "not a JSON object");
  CloneFunctionRecord record;
  record.line_number = line_number;
  record.func = detail::string_field(object, "func", line_number);
  auto idx = object.find("idx");
  if (idx == object.end()) throw FormatError(line_number, "missing \"idx\"");
  if (idx->is_string()) {
    record.idx = idx->get<std::string>();
  } else if (idx->is_number_integer()) {
    record.idx = std::to_string(idx->get<long long>());
  } else {
    throw FormatError(line_number, "\"idx\" must be a string or integer");
  }
  record.line = std::move(line);
  return record;
}

struct ReadStats {
  std::size_t lines = 0;
  std::size_t malformed = 0;
  std::vector<std::string> errors;
};

inline std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  return in;
}

inline std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

// Reads a whole code-search corpus. In lenient mode malformed lines are
// skipped and counted in `stats`; in strict mode the first one aborts.
inline std::vector<CodeSearchRecord> read_code_search_corpus(
    const std::filesystem::path& path,
    ErrorPolicy policy = ErrorPolicy::kStrict, ReadStats* stats = nullptr) {
  std::ifstream in = open_input(path);
  std::vector<CodeSearchRecord> records;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    if (stats != nullptr) ++stats->lines;
    try {
      records.push_back(parse_code_search_record(line, line_number));
    } catch (const FormatError& e) {
      if (policy == ErrorPolicy::kStrict) throw;
      if (stats != nullptr) {
        ++stats->malformed;
        stats->errors.push_back(e.what());
      }
    }
  }
  return records;
}

struct CloneCorpus {
  std::vector<CloneFunctionRecord> functions;  // input order
  std::map<std::string, std::size_t> by_idx;   // idx -> index into functions
  std::vector<ClonePairRecord> pairs;
};

inline std::vector<ClonePairRecord> read_clone_pairs(
    const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  std::vector<ClonePairRecord> pairs;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
      std::size_t start = pos;
      while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
      if (pos > start) parts.push_back(line.substr(start, pos - start));
    }
    if (parts.size() != 3) {
      throw FormatError(line_number, "expected `idx1 idx2 label`");
    }
    if (parts[2] != "0" && parts[2] != "1") {
      throw FormatError(line_number, "label must be 0 or 1");
    }
    pairs.push_back(ClonePairRecord{parts[0], parts[1], parts[2] == "1" ? 1 : 0});
  }
  return pairs;
}

// Reads functions and pairs and checks that every pair key resolves.
inline CloneCorpus read_clone_corpus(const std::filesystem::path& functions_path,
                                     const std::filesystem::path& pairs_path,
                                     ErrorPolicy policy = ErrorPolicy::kStrict,
                                     ReadStats* stats = nullptr) {
  CloneCorpus corpus;
  std::ifstream in = open_input(functions_path);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    if (stats != nullptr) ++stats->lines;
    try {
      CloneFunctionRecord record = parse_clone_function_record(line, line_number);
      corpus.by_idx[record.idx] = corpus.functions.size();
      corpus.functions.push_back(std::move(record));
    } catch (const FormatError& e) {
      if (policy == ErrorPolicy::kStrict) throw;
      if (stats != nullptr) {
        ++stats->malformed;
        stats->errors.push_back(e.what());
      }
    }
  }
  corpus.pairs = read_clone_pairs(pairs_path);
  for (const ClonePairRecord& pair : corpus.pairs) {
    if (corpus.by_idx.count(pair.idx1) == 0) throw DanglingIndexError(pair.idx1);
    if (corpus.by_idx.count(pair.idx2) == 0) throw DanglingIndexError(pair.idx2);
  }
  return corpus;
}

// ---------------------------------------------------------------------------
// Variant matrix
// ---------------------------------------------------------------------------

struct VariantConfig {
  std::optional<int> variant_id;  // 1..16 for canonical d-tags
  Task task = Task::kCodeSearch;
  std::set<SourceLanguage> languages;
  CategorySet categories;
  Strategy strategy = Strategy::kRandomGenerated;
  NamingScheme scheme = NamingScheme::kRandomString;
  std::uint64_t seed = 0;
};

// Expands "d1".."d16" (case-insensitive) into its matrix row.
inline std::optional<VariantConfig> variant_from_tag(std::string_view tag,
                                                     std::uint64_t seed = 0) {
  if (tag.size() < 2 || (tag[0] != 'd' && tag[0] != 'D')) return std::nullopt;
  int k = 0;
  for (char c : tag.substr(1)) {
    if (c < '0' || c > '9') return std::nullopt;
    k = k * 10 + (c - '0');
  }
  if (k < 1 || k > 16) return std::nullopt;

  VariantConfig config;
  config.variant_id = k;
  config.task = k <= 8 ? Task::kCodeSearch : Task::kCloneDetection;
  config.languages = config.task == Task::kCodeSearch
                         ? std::set<SourceLanguage>{SourceLanguage::kJava,
                                                    SourceLanguage::kPython}
                         : std::set<SourceLanguage>{SourceLanguage::kJava};
  int row = (k - 1) % 8;
  switch (row / 2) {
    case 0: config.categories = CategorySet{true, false, false}; break;
    case 1: config.categories = CategorySet{false, true, false}; break;
    case 2: config.categories = CategorySet{false, false, true}; break;
    default: config.categories = CategorySet::all(); break;
  }
  config.strategy = row % 2 == 0 ? Strategy::kRandomGenerated
                                 : Strategy::kShuffling;
  config.scheme = NamingScheme::kRandomString;
  config.seed = seed;
  return config;
}

// Inverse of variant_from_tag; nullopt when the config is not a matrix row.
inline std::optional<std::string> tag_from_variant(const VariantConfig& config) {
  for (int k = 1; k <= 16; ++k) {
    VariantConfig row = *variant_from_tag("d" + std::to_string(k), config.seed);
    if (row.task == config.task && row.languages == config.languages &&
        row.categories == config.categories &&
        row.strategy == config.strategy && row.scheme == config.scheme) {
      return "d" + std::to_string(k);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Variant construction
// ---------------------------------------------------------------------------

struct BuildOptions {
  ErrorPolicy policy = ErrorPolicy::kStrict;
  bool strip_docstring = false;
  bool global_permutation = false;
  RenameOptions rename;
  std::size_t max_logged_errors = 50;
};

struct BuildReport {
  std::string variant_id;  // canonical tag or "custom"
  std::string task;
  std::size_t records_in = 0;
  std::size_t records_out = 0;
  std::size_t renamed_variables = 0;
  std::size_t renamed_definitions = 0;
  std::size_t renamed_invocations = 0;
  std::size_t pool_variables = 0;
  std::size_t pool_definitions = 0;
  std::size_t pool_invocations = 0;
  std::size_t records_skipped_language = 0;
  std::size_t malformed_lines = 0;
  std::size_t record_errors = 0;
  std::size_t token_list_divergences = 0;
  std::size_t pool_fallbacks = 0;
  std::vector<std::string> errors;
  std::uint64_t seed = 0;
  std::string categories;
  std::string strategy;
  std::string scheme;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["variant_id"] = variant_id;
    j["task"] = task;
    j["records_in"] = records_in;
    j["records_out"] = records_out;
    j["renames"] = {{"variable", renamed_variables},
                    {"definition", renamed_definitions},
                    {"invocation", renamed_invocations}};
    j["pool_sizes"] = {{"variable", pool_variables},
                       {"definition", pool_definitions},
                       {"invocation", pool_invocations}};
    j["records_skipped_language"] = records_skipped_language;
    j["malformed_lines"] = malformed_lines;
    j["record_errors"] = record_errors;
    j["token_list_divergences"] = token_list_divergences;
    j["pool_fallbacks"] = pool_fallbacks;
    j["errors"] = errors;
    j["config"] = {{"seed", seed},
                   {"categories", categories},
                   {"strategy", strategy},
                   {"scheme", scheme}};
    return j;
  }
};

// Replaces every token-list element that equals a renamed original. Token
// lists carry no kinds, so an element that was really a string literal is
// replaced too; the builder reports such divergences from the raw-code pass.
struct TokenListRewrite {
  std::vector<std::string> tokens;
  std::map<std::string, std::size_t> replaced;  // original -> count
};

inline TokenListRewrite rewrite_code_tokens(const std::vector<std::string>& tokens,
                                            const RenameMap& map) {
  std::map<std::string, const std::string*> by_text;
  for (const auto& [key, replacement] : map.entries) {
    by_text[key.second] = &replacement;
  }
  TokenListRewrite result;
  result.tokens.reserve(tokens.size());
  for (const std::string& token : tokens) {
    auto it = by_text.find(token);
    if (it == by_text.end()) {
      result.tokens.push_back(token);
    } else {
      result.tokens.push_back(*it->second);
      ++result.replaced[token];
    }
  }
  return result;
}

// Removes a leading docstring from a tokenized Python function body (the
// first statement after the header when it is a lone string literal). The
// docstring's line stays syntactically intact for the remaining statements.
inline TokenStream strip_python_docstring(const TokenStream& stream) {
  if (stream.language != SourceLanguage::kPython) return stream;
  // Find the block colon that closes the first def header.
  std::size_t depth = 0;
  bool saw_def = false;
  std::size_t colon_index = stream.tokens.size();
  for (std::size_t i = 0; i < stream.tokens.size(); ++i) {
    const Token& token = stream.tokens[i];
    if (token.kind == TokenKind::kKeyword && token.text == "def") saw_def = true;
    if (!saw_def) continue;
    if (token.kind == TokenKind::kPunctuation) {
      if (token.text == "(" || token.text == "[" || token.text == "{") ++depth;
      if (token.text == ")" || token.text == "]" || token.text == "}") --depth;
    }
    if (depth == 0 && token.kind == TokenKind::kOperator && token.text == ":") {
      colon_index = i;
      break;
    }
  }
  if (colon_index >= stream.tokens.size()) return stream;

  std::size_t doc_index = stream.tokens.size();
  for (std::size_t i = colon_index + 1; i < stream.tokens.size(); ++i) {
    TokenKind kind = stream.tokens[i].kind;
    if (kind == TokenKind::kLayout || kind == TokenKind::kComment) continue;
    if (kind == TokenKind::kStringLiteral) doc_index = i;
    break;
  }
  if (doc_index >= stream.tokens.size()) return stream;
  bool has_later_statement = false;
  for (std::size_t i = doc_index + 1; i < stream.tokens.size(); ++i) {
    TokenKind kind = stream.tokens[i].kind;
    if (kind != TokenKind::kLayout && kind != TokenKind::kComment) {
      has_later_statement = true;
      break;
    }
  }
  if (!has_later_statement) return stream;  // docstring is the whole body

  TokenStream out;
  out.language = stream.language;
  std::size_t skip_from = doc_index;
  // Also drop the indentation run before the docstring so no blank line is
  // left behind.
  if (doc_index > 0 && stream.tokens[doc_index - 1].kind == TokenKind::kLayout) {
    skip_from = doc_index - 1;
  }
  for (std::size_t i = 0; i < stream.tokens.size(); ++i) {
    if (i >= skip_from && i <= doc_index) continue;
    out.tokens.push_back(stream.tokens[i]);
  }
  std::size_t offset = 0;
  for (Token& token : out.tokens) {
    token.begin = offset;
    offset += token.text.size();
    token.end = offset;
    out.source += token.text;
  }
  return out;
}

namespace detail {

struct RecordOutcome {
  std::string output_line;
  RenameMap map;
  std::size_t divergences = 0;
};

// Anonymizes one parsed record and splices the result back into its line.
// `code_key` is "code" for code search (with code_tokens kept consistent) or
// "func" for clone functions.
inline RecordOutcome anonymize_record_line(
    const std::string& line, std::size_t line_number, const std::string& id,
    SourceLanguage language, const std::string& code,
    const std::vector<std::string>* code_tokens, const VariantConfig& config,
    const BuildOptions& options, const NamePool* pool,
    const GlobalPermutation* permutation) {
  TokenStream stream = tokenize(code, language);
  if (options.strip_docstring) stream = strip_python_docstring(stream);
  NameInventory inventory = classify_names(stream);

  RenameOptions rename_options = options.rename;
  rename_options.global_permutation = permutation;
  RenameMap map = build_rename_map(
      inventory, language, config.categories, config.strategy, config.scheme,
      derive_seed(config.seed, id), config.strategy == Strategy::kShuffling ? pool : nullptr,
      rename_options);

  TokenStream rewritten = apply_renames(stream, map, inventory);
  std::string new_code = detokenize(rewritten);

  JsonLineEditor editor(line, line_number);
  RecordOutcome outcome;
  if (code_tokens != nullptr) {
    editor.replace("code", nlohmann::json(new_code).dump());
    TokenListRewrite list = rewrite_code_tokens(*code_tokens, map);
    editor.replace("code_tokens", nlohmann::json(list.tokens).dump());
    std::map<std::string, std::size_t> raw = count_renamed_occurrences(inventory, map);
    for (const auto& [name, count] : raw) {
      std::size_t in_list = list.replaced.count(name) ? list.replaced.at(name) : 0;
      outcome.divergences += count > in_list ? count - in_list : in_list - count;
    }
    for (const auto& [name, count] : list.replaced) {
      if (raw.count(name) == 0) outcome.divergences += count;
    }
  } else {
    editor.replace("func", nlohmann::json(new_code).dump());
  }
  outcome.output_line = editor.render();
  outcome.map = std::move(map);
  return outcome;
}

inline void account_map(const RenameMap& map, BuildReport* report) {
  report->renamed_variables += map.count(NameCategory::kVariable);
  report->renamed_definitions += map.count(NameCategory::kDefinition);
  report->renamed_invocations += map.count(NameCategory::kInvocation);
  report->pool_fallbacks += map.pool_fallbacks;
}

inline void account_pool(const NamePool& pool, BuildReport* report) {
  for (SourceLanguage language :
       {SourceLanguage::kJava, SourceLanguage::kPython}) {
    report->pool_variables += pool.distinct(language, NameCategory::kVariable);
    report->pool_definitions += pool.distinct(language, NameCategory::kDefinition);
    report->pool_invocations += pool.distinct(language, NameCategory::kInvocation);
  }
}

inline void log_error(const std::string& message, const BuildOptions& options,
                      BuildReport* report) {
  ++report->record_errors;
  if (report->errors.size() < options.max_logged_errors) {
    report->errors.push_back(message);
  }
}

}  // namespace detail

// Builds a code-search variant file. Shuffling triggers a first pass over the
// input to collect the per-language name pools.
inline BuildReport build_code_search_variant(
    const std::filesystem::path& input_path,
    const std::filesystem::path& output_path, const VariantConfig& config,
    const BuildOptions& options = {}) {
  BuildReport report;
  report.variant_id = config.variant_id.has_value()
                          ? "d" + std::to_string(*config.variant_id)
                          : "custom";
  report.task = std::string(to_string(Task::kCodeSearch));
  report.seed = config.seed;
  report.categories = config.categories.to_string();
  report.strategy = std::string(to_string(config.strategy));
  report.scheme = std::string(to_string(config.scheme));

  NamePool pool;
  GlobalPermutation permutation;
  bool has_permutation = false;
  if (config.strategy == Strategy::kShuffling) {
    std::ifstream in = open_input(input_path);
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
      ++line_number;
      if (line.empty()) continue;
      try {
        CodeSearchRecord record = parse_code_search_record(line, line_number);
        if (config.languages.count(record.language) == 0) continue;
        pool.add_inventory(record.language,
                           classify_names(tokenize(record.code, record.language)));
      } catch (const Error&) {
        if (options.policy == ErrorPolicy::kStrict) throw;
        // counted during the rewrite pass
      }
    }
    if (options.global_permutation) {
      permutation = GlobalPermutation::build(pool, config.seed);
      has_permutation = true;
    }
    detail::account_pool(pool, &report);
  }

  std::ifstream in = open_input(input_path);
  std::ofstream out = open_output(output_path);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    CodeSearchRecord record;
    try {
      record = parse_code_search_record(line, line_number);
    } catch (const FormatError& e) {
      if (options.policy == ErrorPolicy::kStrict) throw;
      ++report.malformed_lines;
      if (report.errors.size() < options.max_logged_errors) {
        report.errors.push_back(e.what());
      }
      out << line << '\n';
      continue;
    }
    ++report.records_in;
    if (config.languages.count(record.language) == 0) {
      ++report.records_skipped_language;
      ++report.records_out;
      out << line << '\n';
      continue;
    }
    try {
      detail::RecordOutcome outcome = detail::anonymize_record_line(
          record.line, line_number, record.id, record.language, record.code,
          &record.code_tokens, config, options, &pool,
          has_permutation ? &permutation : nullptr);
      detail::account_map(outcome.map, &report);
      report.token_list_divergences += outcome.divergences;
      out << outcome.output_line << '\n';
    } catch (const Error& e) {
      if (options.policy == ErrorPolicy::kStrict) {
        throw IoError("record at line " + std::to_string(line_number) + ": " +
                      e.what());
      }
      detail::log_error("line " + std::to_string(line_number) + ": " + e.what(),
                        options, &report);
      out << line << '\n';
    }
    ++report.records_out;
  }
  return report;
}

// Builds a clone-detection variant of the functions file. Pair files carry
// only labels and indices and are copied verbatim by the caller when needed.
inline BuildReport build_clone_variant(
    const std::filesystem::path& functions_input,
    const std::filesystem::path& functions_output, const VariantConfig& config,
    const BuildOptions& options = {}) {
  BuildReport report;
  report.variant_id = config.variant_id.has_value()
                          ? "d" + std::to_string(*config.variant_id)
                          : "custom";
  report.task = std::string(to_string(Task::kCloneDetection));
  report.seed = config.seed;
  report.categories = config.categories.to_string();
  report.strategy = std::string(to_string(config.strategy));
  report.scheme = std::string(to_string(config.scheme));

  SourceLanguage language = SourceLanguage::kJava;
  NamePool pool;
  GlobalPermutation permutation;
  bool has_permutation = false;
  if (config.strategy == Strategy::kShuffling) {
    std::ifstream in = open_input(functions_input);
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
      ++line_number;
      if (line.empty()) continue;
      try {
        CloneFunctionRecord record = parse_clone_function_record(line, line_number);
        pool.add_inventory(language,
                           classify_names(tokenize(record.func, language)));
      } catch (const Error&) {
        if (options.policy == ErrorPolicy::kStrict) throw;
      }
    }
    if (options.global_permutation) {
      permutation = GlobalPermutation::build(pool, config.seed);
      has_permutation = true;
    }
    detail::account_pool(pool, &report);
  }

  std::ifstream in = open_input(functions_input);
  std::ofstream out = open_output(functions_output);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    CloneFunctionRecord record;
    try {
      record = parse_clone_function_record(line, line_number);
    } catch (const FormatError& e) {
      if (options.policy == ErrorPolicy::kStrict) throw;
      ++report.malformed_lines;
      if (report.errors.size() < options.max_logged_errors) {
        report.errors.push_back(e.what());
      }
      out << line << '\n';
      continue;
    }
    ++report.records_in;
    try {
      detail::RecordOutcome outcome = detail::anonymize_record_line(
          record.line, line_number, record.idx, language, record.func,
          nullptr, config, options, &pool,
          has_permutation ? &permutation : nullptr);
      detail::account_map(outcome.map, &report);
      out << outcome.output_line << '\n';
    } catch (const Error& e) {
      if (options.policy == ErrorPolicy::kStrict) {
        throw IoError("record at line " + std::to_string(line_number) + ": " +
                      e.what());
      }
      detail::log_error("line " + std::to_string(line_number) + ": " + e.what(),
                        options, &report);
      out << line << '\n';
    }
    ++report.records_out;
  }
  return report;
}

inline BuildReport build_variant(const std::filesystem::path& input_path,
                                 const std::filesystem::path& output_path,
                                 const VariantConfig& config,
                                 const BuildOptions& options = {}) {
  return config.task == Task::kCodeSearch
             ? build_code_search_variant(input_path, output_path, config, options)
             : build_clone_variant(input_path, output_path, config, options);
}

// ---------------------------------------------------------------------------
// Train/test split
// ---------------------------------------------------------------------------

struct SplitResult {
  std::size_t total = 0;
  std::size_t train = 0;
  std::size_t test = 0;
};

// Seeded line-level split. Both sides preserve the input's relative order;
// together they are a disjoint, exhaustive partition.
inline SplitResult split_corpus(const std::filesystem::path& input_path,
                                const std::filesystem::path& train_path,
                                const std::filesystem::path& test_path,
                                double train_fraction, std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw InvalidConfigError("train fraction must be in (0, 1)");
  }
  std::ifstream in = open_input(input_path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  std::size_t n = lines.size();
  auto train_count = static_cast<std::size_t>(
      std::llround(train_fraction * static_cast<double>(n)));
  if (train_count > n) train_count = n;

  SplitMix64 rng(seed);
  std::vector<std::size_t> order = sample_without_replacement(n, train_count, rng);
  std::vector<bool> in_train(n, false);
  for (std::size_t index : order) in_train[index] = true;

  std::ofstream train_out = open_output(train_path);
  std::ofstream test_out = open_output(test_path);
  SplitResult result;
  result.total = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (in_train[i]) {
      train_out << lines[i] << '\n';
      ++result.train;
    } else {
      test_out << lines[i] << '\n';
      ++result.test;
    }
  }
  return result;
}

}  // namespace nameblind

#endif  // NAMEBLIND_CORPUS_HPP_
