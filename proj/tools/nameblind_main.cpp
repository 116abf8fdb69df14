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
// nameblind — identifier anonymization and robustness evaluation for code
// corpora. Reports and corpora go to files or stdout; diagnostics go to
// stderr. Exit codes: 0 success, 1 runtime failure, 2 usage error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nameblind/anonymizer.hpp"
#include "nameblind/corpus.hpp"
#include "nameblind/errors.hpp"
#include "nameblind/eval.hpp"

namespace {

using nameblind::CategorySet;
using nameblind::ErrorPolicy;
using nameblind::NamePool;
using nameblind::SourceLanguage;
using nameblind::Strategy;
using nameblind::NamingScheme;

struct CommonFlags {
  std::uint64_t seed = 0;
  bool lenient = false;

  ErrorPolicy policy() const {
    return lenient ? ErrorPolicy::kLenient : ErrorPolicy::kStrict;
  }
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw nameblind::IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw nameblind::IoError("cannot open " + path.string() + " for writing");
  out << content;
}

void copy_file_bytes(const std::filesystem::path& from,
                     const std::filesystem::path& to) {
  write_file(to, read_file(from));
}

SourceLanguage parse_language_or_throw(const std::string& name) {
  std::optional<SourceLanguage> language = nameblind::parse_language(name);
  if (!language.has_value()) throw nameblind::UnsupportedLanguageError(name);
  return *language;
}

// Shuffle pools can come from either corpus format; records are told apart
// by their keys (`code`+`language` vs `func`).
NamePool load_pool_corpus(const std::filesystem::path& path, ErrorPolicy policy) {
  NamePool pool;
  std::ifstream in = nameblind::open_input(path);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      nlohmann::json object = nlohmann::json::parse(line);
      if (object.is_object() && object.contains("func")) {
        nameblind::CloneFunctionRecord record =
            nameblind::parse_clone_function_record(line, line_number);
        pool.add_inventory(SourceLanguage::kJava,
                           nameblind::classify_names(nameblind::tokenize(
                               record.func, SourceLanguage::kJava)));
      } else {
        nameblind::CodeSearchRecord record =
            nameblind::parse_code_search_record(line, line_number);
        pool.add_inventory(record.language,
                           nameblind::classify_names(nameblind::tokenize(
                               record.code, record.language)));
      }
    } catch (const nameblind::Error&) {
      if (policy == ErrorPolicy::kStrict) throw;
    } catch (const nlohmann::json::exception& e) {
      if (policy == ErrorPolicy::kStrict) {
        throw nameblind::FormatError(line_number, e.what());
      }
    }
  }
  return pool;
}

nlohmann::ordered_json rename_map_json(const nameblind::RenameMap& map) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& [key, replacement] : map.entries) {
    entries.push_back({{"category", std::string(to_string(key.first))},
                       {"original", key.second},
                       {"replacement", replacement}});
  }
  return {{"seed", map.seed}, {"entries", entries}};
}

void emit_json(const nlohmann::ordered_json& value, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << value.dump(2) << "\n";
  } else {
    write_file(out_path, value.dump(2) + "\n");
  }
}

// --------------------------------------------------------------------------
// anonymize
// --------------------------------------------------------------------------

struct AnonymizeArgs {
  CommonFlags common;
  std::string in_path, snippet_path, out_path;
  std::string language;
  std::string variant;
  std::string task = "code-search";
  std::string categories = "var,def,inv";
  std::string strategy = "random";
  std::string scheme = "random-string";
  std::string pool_path;
  std::string pairs_in, pairs_out;
  std::string report_path;
  std::string map_out;
  bool strip_docstring = false;
  bool global_permutation = false;
  std::size_t random_name_length = 16;
};

int run_anonymize(const AnonymizeArgs& args) {
  CategorySet categories = CategorySet::parse(args.categories)
                               .value_or(CategorySet{});
  if (categories.empty()) {
    throw nameblind::InvalidConfigError("bad --categories \"" + args.categories +
                                        "\" (use a subset of var,def,inv)");
  }
  Strategy strategy = args.strategy == "shuffle" ? Strategy::kShuffling
                                                 : Strategy::kRandomGenerated;
  NamingScheme scheme = args.scheme == "sequential" ? NamingScheme::kSequential
                                                    : NamingScheme::kRandomString;

  if (!args.snippet_path.empty()) {
    SourceLanguage language = parse_language_or_throw(args.language);
    std::string source = read_file(args.snippet_path);

    NamePool pool;
    if (strategy == Strategy::kShuffling) {
      pool = load_pool_corpus(args.pool_path, args.common.policy());
    }
    nameblind::GlobalPermutation permutation;
    nameblind::RenameOptions rename_options;
    rename_options.random_name_length = args.random_name_length;
    if (args.global_permutation) {
      permutation = nameblind::GlobalPermutation::build(pool, args.common.seed);
      rename_options.global_permutation = &permutation;
    }

    nameblind::TokenStream stream = nameblind::tokenize(source, language);
    if (args.strip_docstring) stream = nameblind::strip_python_docstring(stream);
    nameblind::NameInventory inventory = nameblind::classify_names(stream);
    nameblind::RenameMap map = nameblind::build_rename_map(
        inventory, language, categories, strategy, scheme, args.common.seed,
        strategy == Strategy::kShuffling ? &pool : nullptr, rename_options);
    std::string anonymized =
        nameblind::detokenize(nameblind::apply_renames(stream, map, inventory));

    if (args.out_path.empty()) {
      std::cout << anonymized;
    } else {
      write_file(args.out_path, anonymized);
    }
    if (!args.map_out.empty()) {
      write_file(args.map_out, rename_map_json(map).dump(2) + "\n");
    }
    std::cerr << "anonymized " << map.entries.size() << " name(s): "
              << map.count(nameblind::NameCategory::kVariable) << " variable, "
              << map.count(nameblind::NameCategory::kDefinition) << " definition, "
              << map.count(nameblind::NameCategory::kInvocation) << " invocation\n";
    return 0;
  }

  // Corpus mode.
  nameblind::VariantConfig config;
  if (!args.variant.empty()) {
    std::optional<nameblind::VariantConfig> tagged =
        nameblind::variant_from_tag(args.variant, args.common.seed);
    if (!tagged.has_value()) {
      throw nameblind::InvalidConfigError("unknown variant tag \"" +
                                          args.variant + "\" (use d1..d16)");
    }
    config = *tagged;
  } else {
    config.task = args.task == "clone" ? nameblind::Task::kCloneDetection
                                       : nameblind::Task::kCodeSearch;
    config.languages =
        config.task == nameblind::Task::kCloneDetection
            ? std::set<SourceLanguage>{SourceLanguage::kJava}
            : std::set<SourceLanguage>{SourceLanguage::kJava,
                                       SourceLanguage::kPython};
    config.categories = categories;
    config.strategy = strategy;
    config.scheme = scheme;
    config.seed = args.common.seed;
  }
  if (!args.language.empty()) {
    config.languages = {parse_language_or_throw(args.language)};
  }

  nameblind::BuildOptions options;
  options.policy = args.common.policy();
  options.strip_docstring = args.strip_docstring;
  options.global_permutation = args.global_permutation;
  options.rename.random_name_length = args.random_name_length;

  nameblind::BuildReport report =
      nameblind::build_variant(args.in_path, args.out_path, config, options);

  if (config.task == nameblind::Task::kCloneDetection && !args.pairs_in.empty()) {
    std::filesystem::path pairs_out =
        args.pairs_out.empty() ? std::filesystem::path(args.pairs_in + ".out")
                               : std::filesystem::path(args.pairs_out);
    copy_file_bytes(args.pairs_in, pairs_out);
  }

  emit_json(report.to_json(), args.report_path);
  std::cerr << "built " << report.variant_id << ": " << report.records_out
            << " record(s), " << report.record_errors << " error(s)\n";
  return args.common.lenient || report.record_errors == 0 ? 0 : 1;
}

// --------------------------------------------------------------------------
// evaluate
// --------------------------------------------------------------------------

struct CodeSearchArgs {
  CommonFlags common;
  std::string in_path, scores_path, out_path;
  std::size_t distractors = 999;
  std::string tie = "pessimistic";
  std::string mode = "per-query";
  bool table = false;
};

int run_eval_code_search(const CodeSearchArgs& args) {
  nameblind::ReadStats stats;
  std::vector<nameblind::CodeSearchRecord> records =
      nameblind::read_code_search_corpus(args.in_path, args.common.policy(),
                                         &stats);
  nameblind::CodeSearchEvalOptions options;
  options.distractor_count = args.distractors;
  options.seed = args.common.seed;
  options.tie_break = args.tie == "optimistic" ? nameblind::TieBreak::kOptimistic
                                               : nameblind::TieBreak::kPessimistic;
  options.mode = args.mode == "shared-pool"
                     ? nameblind::DistractorMode::kSharedPool
                     : nameblind::DistractorMode::kPerQuery;

  nameblind::EvalReport report;
  if (!args.scores_path.empty()) {
    nameblind::ExternalScoreTable table =
        nameblind::import_external_scores(args.scores_path);
    report = nameblind::run_code_search_eval(records, table, options);
  } else {
    nameblind::LexicalScorer scorer;
    report = nameblind::run_code_search_eval(records, scorer, options);
  }

  emit_json(report.to_json(), args.out_path);
  if (args.table) std::cerr << report.to_table();
  if (stats.malformed > 0) {
    std::cerr << "skipped " << stats.malformed << " malformed line(s)\n";
  }
  return 0;
}

struct CloneArgs {
  CommonFlags common;
  std::string functions_path, pairs_path, scores_path, out_path;
  double threshold = 0.5;
  std::string sweep;
  bool table = false;
};

std::vector<double> parse_sweep(const std::string& spec) {
  std::vector<double> thresholds;
  std::stringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    thresholds.push_back(std::stod(item));
  }
  return thresholds;
}

int run_eval_clone(const CloneArgs& args) {
  nameblind::ReadStats stats;
  nameblind::CloneCorpus corpus = nameblind::read_clone_corpus(
      args.functions_path, args.pairs_path, args.common.policy(), &stats);

  std::map<std::string, std::vector<std::string>> tokens;
  for (const nameblind::CloneFunctionRecord& function : corpus.functions) {
    tokens[function.idx] = nameblind::significant_token_texts(
        function.func, SourceLanguage::kJava);
  }

  nameblind::CloneEvalOptions options;
  options.threshold = args.threshold;
  options.sweep = parse_sweep(args.sweep);

  nameblind::EvalReport report;
  if (!args.scores_path.empty()) {
    nameblind::ExternalScoreTable table =
        nameblind::import_external_scores(args.scores_path);
    report = nameblind::run_clone_eval(tokens, corpus.pairs, table, options);
  } else {
    nameblind::LexicalScorer scorer;
    report = nameblind::run_clone_eval(tokens, corpus.pairs, scorer, options);
  }

  emit_json(report.to_json(), args.out_path);
  if (args.table) std::cerr << report.to_table();
  return 0;
}

// --------------------------------------------------------------------------
// stats
// --------------------------------------------------------------------------

struct StatsArgs {
  CommonFlags common;
  std::string in_path, functions_path, snippet_path;
  std::string language;
  std::size_t top = 10;
  std::string out_path;
};

int run_stats(const StatsArgs& args) {
  NamePool pool;
  nameblind::NameInventory::Stats occurrence_totals;
  std::size_t records = 0;
  std::map<std::string, std::size_t> language_counts;

  auto account = [&](SourceLanguage language, const std::string& code) {
    nameblind::NameInventory inventory =
        nameblind::classify_names(nameblind::tokenize(code, language));
    pool.add_inventory(language, inventory);
    occurrence_totals.variable_occurrences += inventory.stats.variable_occurrences;
    occurrence_totals.definition_occurrences += inventory.stats.definition_occurrences;
    occurrence_totals.invocation_occurrences += inventory.stats.invocation_occurrences;
    occurrence_totals.preserved_occurrences += inventory.stats.preserved_occurrences;
    occurrence_totals.fallthrough_variables += inventory.stats.fallthrough_variables;
    ++records;
    ++language_counts[std::string(to_string(language))];
  };

  if (!args.snippet_path.empty()) {
    SourceLanguage language = parse_language_or_throw(args.language);
    account(language, read_file(args.snippet_path));
  } else if (!args.functions_path.empty()) {
    std::ifstream in = nameblind::open_input(args.functions_path);
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
      ++line_number;
      if (line.empty()) continue;
      try {
        nameblind::CloneFunctionRecord record =
            nameblind::parse_clone_function_record(line, line_number);
        account(SourceLanguage::kJava, record.func);
      } catch (const nameblind::Error&) {
        if (!args.common.lenient) throw;
      }
    }
  } else {
    nameblind::ReadStats read_stats;
    for (const nameblind::CodeSearchRecord& record :
         nameblind::read_code_search_corpus(args.in_path, args.common.policy(),
                                            &read_stats)) {
      try {
        account(record.language, record.code);
      } catch (const nameblind::Error&) {
        if (!args.common.lenient) throw;
      }
    }
  }

  auto top_names = [&](nameblind::NameCategory category) {
    std::vector<std::pair<std::string, std::size_t>> all;
    for (SourceLanguage language : {SourceLanguage::kJava, SourceLanguage::kPython}) {
      for (const auto& [name, count] : pool.bucket(language, category)) {
        all.emplace_back(name, count);
      }
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
      return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < all.size() && i < args.top; ++i) {
      rows.push_back({{"name", all[i].first}, {"snippets", all[i].second}});
    }
    return rows;
  };
  auto distinct = [&](nameblind::NameCategory category) {
    return pool.distinct(SourceLanguage::kJava, category) +
           pool.distinct(SourceLanguage::kPython, category);
  };

  nlohmann::ordered_json j;
  j["records"] = records;
  j["languages"] = language_counts;
  j["distinct_names"] = {
      {"variable", distinct(nameblind::NameCategory::kVariable)},
      {"definition", distinct(nameblind::NameCategory::kDefinition)},
      {"invocation", distinct(nameblind::NameCategory::kInvocation)}};
  j["occurrences"] = {
      {"variable", occurrence_totals.variable_occurrences},
      {"definition", occurrence_totals.definition_occurrences},
      {"invocation", occurrence_totals.invocation_occurrences},
      {"preserved", occurrence_totals.preserved_occurrences}};
  j["fallthrough_variables"] = occurrence_totals.fallthrough_variables;
  j["top"] = {{"variable", top_names(nameblind::NameCategory::kVariable)},
              {"definition", top_names(nameblind::NameCategory::kDefinition)},
              {"invocation", top_names(nameblind::NameCategory::kInvocation)}};
  emit_json(j, args.out_path);
  return 0;
}

// --------------------------------------------------------------------------
// split
// --------------------------------------------------------------------------

struct SplitArgs {
  CommonFlags common;
  std::string in_path, train_path, test_path;
  double fraction = 0.8;
};

int run_split(const SplitArgs& args) {
  nameblind::SplitResult result = nameblind::split_corpus(
      args.in_path, args.train_path, args.test_path, args.fraction,
      args.common.seed);
  nlohmann::ordered_json j = {{"total", result.total},
                              {"train", result.train},
                              {"test", result.test}};
  emit_json(j, "");
  return 0;
}

void add_common(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--seed", flags->seed, "Seed for every random draw")
      ->envname("NAMEBLIND_SEED");
  cmd->add_flag("--lenient", flags->lenient,
                "Skip and count bad records instead of aborting");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "nameblind: anonymize identifiers in Java/Python corpora and evaluate "
      "code-search/clone-detection robustness"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "Key=value file with [subcommand] sections; must precede the "
                 "subcommand");
  app.failure_message(CLI::FailureMessage::help);

  AnonymizeArgs anon;
  CLI::App* anonymize = app.add_subcommand(
      "anonymize", "Rewrite developer-defined names in a snippet or corpus");
  add_common(anonymize, &anon.common);
  auto* anon_in = anonymize->add_option("--in", anon.in_path,
                                        "Corpus JSONL input");
  auto* anon_snippet = anonymize->add_option("--snippet", anon.snippet_path,
                                             "Single source file input");
  anon_in->excludes(anon_snippet);
  anonymize->add_option("--out", anon.out_path,
                        "Output path (snippet mode defaults to stdout)");
  anonymize->add_option("--language", anon.language,
                        "java or python (snippet mode; corpus filter)");
  auto* anon_variant = anonymize->add_option(
      "--variant", anon.variant, "Canonical matrix cell d1..d16");
  auto* anon_task = anonymize->add_option("--task", anon.task,
                                          "code-search or clone")
                        ->check(CLI::IsMember({"code-search", "clone"}));
  auto* anon_categories = anonymize->add_option(
      "--categories", anon.categories, "Subset of var,def,inv (default all)");
  auto* anon_strategy = anonymize->add_option("--strategy", anon.strategy,
                                              "random or shuffle")
                            ->check(CLI::IsMember({"random", "shuffle"}));
  auto* anon_scheme = anonymize->add_option(
      "--scheme", anon.scheme, "random-string or sequential")
                          ->check(CLI::IsMember({"random-string", "sequential"}));
  anon_variant->excludes(anon_task);
  anon_variant->excludes(anon_categories);
  anon_variant->excludes(anon_strategy);
  anon_variant->excludes(anon_scheme);
  anonymize->add_option("--pool", anon.pool_path,
                        "Corpus supplying the shuffle name pool (snippet mode)");
  anonymize->add_option("--pairs-in", anon.pairs_in,
                        "Clone pair file to copy verbatim");
  anonymize->add_option("--pairs-out", anon.pairs_out,
                        "Destination for the copied pair file");
  anonymize->add_option("--report", anon.report_path,
                        "Write the build report JSON here instead of stdout");
  anonymize->add_option("--map-out", anon.map_out,
                        "Write the rename map JSON here (snippet mode)");
  anonymize->add_flag("--strip-docstring", anon.strip_docstring,
                      "Drop a leading Python docstring from code before renaming");
  anonymize->add_flag("--global-permutation", anon.global_permutation,
                      "Shuffle via one corpus-wide permutation per category");
  anonymize->add_option("--random-name-length", anon.random_name_length,
                        "Length of random-string replacements (default 16)");

  CLI::App* evaluate = app.add_subcommand("evaluate", "Run an evaluation protocol");
  evaluate->require_subcommand(1);

  CodeSearchArgs cs;
  CLI::App* eval_cs = evaluate->add_subcommand(
      "code-search", "MRR of each docstring against its snippet plus distractors");
  add_common(eval_cs, &cs.common);
  eval_cs->add_option("--in", cs.in_path, "Corpus JSONL input")->required();
  eval_cs->add_option("--scores", cs.scores_path,
                      "External score file (JSONL query_id/candidate_id/score)");
  eval_cs->add_option("--distractors", cs.distractors,
                      "Distractors per query (default 999)");
  eval_cs->add_option("--tie", cs.tie, "pessimistic or optimistic")
      ->check(CLI::IsMember({"pessimistic", "optimistic"}));
  eval_cs->add_option("--distractor-mode", cs.mode,
                      "per-query or shared-pool")
      ->check(CLI::IsMember({"per-query", "shared-pool"}));
  eval_cs->add_option("--out", cs.out_path,
                      "Write the report JSON here instead of stdout");
  eval_cs->add_flag("--table", cs.table, "Also print an aligned table to stderr");

  CloneArgs clone;
  CLI::App* eval_clone = evaluate->add_subcommand(
      "clone", "F1 over labeled clone pairs at a similarity threshold");
  add_common(eval_clone, &clone.common);
  eval_clone->add_option("--functions", clone.functions_path,
                         "Functions JSONL (func/idx)")->required();
  eval_clone->add_option("--pairs", clone.pairs_path,
                         "Pair file (idx1 idx2 label)")->required();
  eval_clone->add_option("--scores", clone.scores_path, "External score file");
  eval_clone->add_option("--threshold", clone.threshold,
                         "Clone decision threshold (default 0.5)");
  eval_clone->add_option("--sweep", clone.sweep,
                         "Comma-separated extra thresholds to report");
  eval_clone->add_option("--out", clone.out_path,
                         "Write the report JSON here instead of stdout");
  eval_clone->add_flag("--table", clone.table,
                       "Also print an aligned table to stderr");

  StatsArgs stats;
  CLI::App* stats_cmd = app.add_subcommand(
      "stats", "Per-category identifier statistics for a corpus or snippet");
  add_common(stats_cmd, &stats.common);
  auto* stats_in = stats_cmd->add_option("--in", stats.in_path,
                                         "Code-search corpus JSONL");
  auto* stats_fn = stats_cmd->add_option("--functions", stats.functions_path,
                                         "Clone functions JSONL");
  auto* stats_sn = stats_cmd->add_option("--snippet", stats.snippet_path,
                                         "Single source file");
  stats_in->excludes(stats_fn);
  stats_in->excludes(stats_sn);
  stats_fn->excludes(stats_sn);
  stats_cmd->add_option("--language", stats.language,
                        "java or python (snippet mode)");
  stats_cmd->add_option("--top", stats.top, "Names to list per category");
  stats_cmd->add_option("--out", stats.out_path,
                        "Write the stats JSON here instead of stdout");

  SplitArgs split;
  CLI::App* split_cmd =
      app.add_subcommand("split", "Seeded train/test split of a JSONL corpus");
  add_common(split_cmd, &split.common);
  split_cmd->add_option("--in", split.in_path, "Corpus JSONL input")->required();
  split_cmd->add_option("--train-out", split.train_path, "Train side output")
      ->required();
  split_cmd->add_option("--test-out", split.test_path, "Test side output")
      ->required();
  split_cmd->add_option("--fraction", split.fraction,
                        "Train fraction in (0,1), default 0.8");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (anonymize->parsed()) {
      // Usage-level validation beyond what CLI11 expresses.
      if (anon.in_path.empty() == anon.snippet_path.empty()) {
        std::cerr << "nameblind: exactly one of --in or --snippet is required\n";
        return 2;
      }
      if (!anon.snippet_path.empty()) {
        if (anon.language.empty()) {
          std::cerr << "nameblind: --snippet requires --language\n";
          return 2;
        }
        if (!anon.variant.empty()) {
          std::cerr << "nameblind: --variant applies to corpus input only\n";
          return 2;
        }
        if (anon.strategy == "shuffle" && anon.pool_path.empty()) {
          std::cerr << "nameblind: shuffling a single snippet requires --pool "
                       "(a corpus to draw names from)\n";
          return 2;
        }
      } else if (anon.out_path.empty()) {
        std::cerr << "nameblind: corpus mode requires --out\n";
        return 2;
      }
      return run_anonymize(anon);
    }
    if (eval_cs->parsed()) return run_eval_code_search(cs);
    if (eval_clone->parsed()) return run_eval_clone(clone);
    if (stats_cmd->parsed()) {
      if (stats.in_path.empty() && stats.functions_path.empty() &&
          stats.snippet_path.empty()) {
        std::cerr << "nameblind: one of --in, --functions, --snippet is required\n";
        return 2;
      }
      if (!stats.snippet_path.empty() && stats.language.empty()) {
        std::cerr << "nameblind: --snippet requires --language\n";
        return 2;
      }
      return run_stats(stats);
    }
    if (split_cmd->parsed()) return run_split(split);
  } catch (const nameblind::InvalidConfigError& e) {
    std::cerr << "nameblind: " << e.what() << "\n";
    return 2;
  } catch (const nameblind::Error& e) {
    std::cerr << "nameblind: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "nameblind: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
