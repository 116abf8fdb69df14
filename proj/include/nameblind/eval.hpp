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
// Evaluation protocols: code-search MRR (each query ranks its own snippet
// against 999 seeded distractors) and clone-detection F1 over labeled pairs.
// Scorers are pluggable; the built-in lexical baseline is a cosine over
// lowercased identifier sub-tokens, a desk-scale stand-in for a model that
// leans on literal features. Score files produced elsewhere can be imported
// and ranked under the identical protocol.

#ifndef NAMEBLIND_EVAL_HPP_
#define NAMEBLIND_EVAL_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nameblind/corpus.hpp"
#include "nameblind/errors.hpp"
#include "nameblind/lexer.hpp"
#include "nameblind/rng.hpp"

namespace nameblind {

// Splits an identifier-ish token into lowercased sub-tokens: underscores and
// other non-alphanumerics separate, as do camelCase boundaries (`parseHTTPUrl`
// -> parse, http, url) and letter/digit transitions.
inline std::vector<std::string> split_subtokens(std::string_view token) {
  std::vector<std::string> parts;
  std::string current;
  auto flush = [&]() {
    if (!current.empty()) {
      parts.push_back(current);
      current.clear();
    }
  };
  auto is_lower = [](char c) { return c >= 'a' && c <= 'z'; };
  auto is_upper = [](char c) { return c >= 'A' && c <= 'Z'; };
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };

  for (std::size_t i = 0; i < token.size(); ++i) {
    char c = token[i];
    if (!is_lower(c) && !is_upper(c) && !is_digit(c) &&
        static_cast<unsigned char>(c) < 0x80) {
      flush();
      continue;
    }
    if (!current.empty()) {
      char p = token[i - 1];
      bool boundary =
          (is_lower(p) && is_upper(c)) ||                       // fooBar
          (is_upper(p) && is_upper(c) && i + 1 < token.size() &&
           is_lower(token[i + 1])) ||                           // HTTPServer
          (is_digit(p) != is_digit(c) &&
           (is_digit(p) || is_digit(c)));                       // abc123
      if (boundary) flush();
    }
    current += is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c;
  }
  flush();
  return parts;
}

// Term-frequency vector over sub-tokens, sorted by term.
struct TfVector {
  std::vector<std::pair<std::string, double>> terms;
  double norm = 0.0;

  bool empty() const { return terms.empty(); }
};

inline TfVector term_frequency(std::span<const std::string> tokens) {
  std::map<std::string, double> counts;
  for (const std::string& token : tokens) {
    for (std::string& part : split_subtokens(token)) {
      counts[std::move(part)] += 1.0;
    }
  }
  TfVector tf;
  tf.terms.assign(counts.begin(), counts.end());
  double sq = 0.0;
  for (const auto& [term, count] : tf.terms) sq += count * count;
  tf.norm = std::sqrt(sq);
  return tf;
}

// Cosine similarity; two empty vectors are identical (1.0), one empty is
// maximally dissimilar (0.0).
inline double cosine(const TfVector& a, const TfVector& b) {
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  double dot = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    int cmp = a.terms[i].first.compare(b.terms[j].first);
    if (cmp == 0) {
      dot += a.terms[i].second * b.terms[j].second;
      ++i;
      ++j;
    } else if (cmp < 0) {
      ++i;
    } else {
      ++j;
    }
  }
  double value = dot / (a.norm * b.norm);
  return value < 0.0 ? 0.0 : (value > 1.0 ? 1.0 : value);
}

inline double lexical_score(std::span<const std::string> a,
                            std::span<const std::string> b) {
  return cosine(term_frequency(a), term_frequency(b));
}

// Scoring interface: similarity in [0, 1] between a query (docstring tokens
// in code-search mode, code tokens in clone mode) and a candidate.
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual double score_pair(std::string_view query_id,
                            std::span<const std::string> query_tokens,
                            std::string_view candidate_id,
                            std::span<const std::string> candidate_tokens) const = 0;
};

// The lexical baseline. Caches TF vectors keyed by the token storage, which
// is stable for the duration of an evaluation; not safe for concurrent use.
class LexicalScorer : public Scorer {
 public:
  double score_pair(std::string_view, std::span<const std::string> query_tokens,
                    std::string_view,
                    std::span<const std::string> candidate_tokens) const override {
    return cosine(cached(query_tokens), cached(candidate_tokens));
  }

 private:
  const TfVector& cached(std::span<const std::string> tokens) const {
    const void* key = tokens.data();
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, term_frequency(tokens)).first;
    }
    return it->second;
  }

  mutable std::map<const void*, TfVector> cache_;
};

// Table-backed scorer over rows {query_id, candidate_id, score}. Clone-mode
// lookups try both orders before failing.
class ExternalScoreTable : public Scorer {
 public:
  void insert(std::string query_id, std::string candidate_id, double score) {
    scores_[{std::move(query_id), std::move(candidate_id)}] = score;
  }
  std::size_t size() const { return scores_.size(); }

  double score_pair(std::string_view query_id, std::span<const std::string>,
                    std::string_view candidate_id,
                    std::span<const std::string>) const override {
    auto it = scores_.find({std::string(query_id), std::string(candidate_id)});
    if (it != scores_.end()) return it->second;
    it = scores_.find({std::string(candidate_id), std::string(query_id)});
    if (it != scores_.end()) return it->second;
    throw MissingScoreError(std::string(query_id), std::string(candidate_id));
  }

 private:
  std::map<std::pair<std::string, std::string>, double> scores_;
};

inline ExternalScoreTable import_external_scores(
    const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  ExternalScoreTable table;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    nlohmann::json row;
    try {
      row = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(line_number, e.what());
    }
    if (!row.is_object()) throw FormatError(line_number, "not a JSON object");
    auto id_of = [&](const char* key) -> std::string {
      auto it = row.find(key);
      if (it == row.end()) {
        throw FormatError(line_number, std::string("missing \"") + key + "\"");
      }
      if (it->is_string()) return it->get<std::string>();
      if (it->is_number_integer()) return std::to_string(it->get<long long>());
      throw FormatError(line_number, std::string("\"") + key +
                                         "\" must be a string or integer");
    };
    auto score = row.find("score");
    if (score == row.end() || !score->is_number()) {
      throw FormatError(line_number, "missing or non-numeric \"score\"");
    }
    double value = score->get<double>();
    if (!std::isfinite(value)) {
      throw FormatError(line_number, "score must be finite");
    }
    table.insert(id_of("query_id"), id_of("candidate_id"), value);
  }
  return table;
}

// ---------------------------------------------------------------------------
// Metrics
// ---------------------------------------------------------------------------

enum class TieBreak { kPessimistic, kOptimistic };

inline std::string_view to_string(TieBreak tie) {
  return tie == TieBreak::kPessimistic ? "pessimistic" : "optimistic";
}

// Rank of the gold candidate among the distractors. Pessimistic tie-breaking
// places gold after every equal-scored distractor; optimistic places it
// before them.
inline std::size_t rank_of_gold(double gold_score,
                                std::span<const double> distractor_scores,
                                TieBreak tie = TieBreak::kPessimistic) {
  std::size_t higher = 0, equal = 0;
  for (double s : distractor_scores) {
    if (s > gold_score) ++higher;
    else if (s == gold_score) ++equal;
  }
  return tie == TieBreak::kPessimistic ? higher + equal + 1 : higher + 1;
}

inline double mean_reciprocal_rank(std::span<const std::size_t> ranks) {
  if (ranks.empty()) throw EmptyInputError("no ranks");
  long double sum = 0.0L;
  for (std::size_t rank : ranks) {
    if (rank < 1) throw InvalidConfigError("ranks must be positive");
    sum += 1.0L / static_cast<long double>(rank);
  }
  return static_cast<double>(sum / static_cast<long double>(ranks.size()));
}

struct PrecisionRecallF1 {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// 0/0 ratios resolve to 0 by convention.
inline PrecisionRecallF1 f1_from_counts(std::size_t tp, std::size_t fp,
                                        std::size_t fn) {
  PrecisionRecallF1 result;
  result.precision = tp + fp == 0 ? 0.0
                                  : static_cast<double>(tp) /
                                        static_cast<double>(tp + fp);
  result.recall = tp + fn == 0 ? 0.0
                               : static_cast<double>(tp) /
                                     static_cast<double>(tp + fn);
  result.f1 = result.precision + result.recall == 0.0
                  ? 0.0
                  : 2.0 * result.precision * result.recall /
                        (result.precision + result.recall);
  return result;
}

// ---------------------------------------------------------------------------
// Protocols
// ---------------------------------------------------------------------------

enum class DistractorMode { kPerQuery, kSharedPool };

inline std::string_view to_string(DistractorMode mode) {
  return mode == DistractorMode::kPerQuery ? "per-query" : "shared-pool";
}

struct CodeSearchEvalOptions {
  std::size_t distractor_count = 999;
  std::uint64_t seed = 0;
  TieBreak tie_break = TieBreak::kPessimistic;
  DistractorMode mode = DistractorMode::kPerQuery;
};

struct SweepPoint {
  double threshold = 0.0;
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
  PrecisionRecallF1 prf;
};

struct EvalReport {
  std::string task;
  std::string metric;
  double value = 0.0;
  std::size_t n = 0;

  // code-search echo
  std::uint64_t seed = 0;
  std::size_t distractors_requested = 0;
  std::size_t distractors_effective_min = 0;
  std::size_t distractors_effective_max = 0;
  std::string tie_break;
  std::string distractor_mode;

  // clone echo
  double threshold = 0.0;
  PrecisionRecallF1 prf;
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
  std::vector<SweepPoint> sweep;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["task"] = task;
    j["metric"] = metric;
    j["value"] = value;
    j["n"] = n;
    if (task == "code-search") {
      j["config"] = {{"seed", seed},
                     {"distractors", distractors_requested},
                     {"distractors_effective_min", distractors_effective_min},
                     {"distractors_effective_max", distractors_effective_max},
                     {"tie_break", tie_break},
                     {"distractor_mode", distractor_mode}};
    } else {
      j["config"] = {{"threshold", threshold}};
      j["precision"] = prf.precision;
      j["recall"] = prf.recall;
      j["confusion"] = {{"tp", tp}, {"fp", fp}, {"fn", fn}, {"tn", tn}};
      if (!sweep.empty()) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const SweepPoint& point : sweep) {
          rows.push_back({{"threshold", point.threshold},
                          {"precision", point.prf.precision},
                          {"recall", point.prf.recall},
                          {"f1", point.prf.f1},
                          {"tp", point.tp},
                          {"fp", point.fp},
                          {"fn", point.fn},
                          {"tn", point.tn}});
        }
        j["sweep"] = rows;
      }
    }
    return j;
  }

  std::string to_table() const {
    char buffer[160];
    std::string out;
    std::snprintf(buffer, sizeof buffer, "%-14s %-10s %10s %8s\n", "task",
                  "metric", "value", "n");
    out += buffer;
    std::snprintf(buffer, sizeof buffer, "%-14s %-10s %10.6f %8zu\n",
                  task.c_str(), metric.c_str(), value, n);
    out += buffer;
    if (metric == "F1") {
      std::snprintf(buffer, sizeof buffer,
                    "%-14s precision=%.6f recall=%.6f threshold=%.3f\n", "",
                    prf.precision, prf.recall, threshold);
      out += buffer;
      for (const SweepPoint& point : sweep) {
        std::snprintf(buffer, sizeof buffer,
                      "%-14s t=%.3f f1=%.6f precision=%.6f recall=%.6f\n",
                      "sweep", point.threshold, point.prf.f1,
                      point.prf.precision, point.prf.recall);
        out += buffer;
      }
    }
    return out;
  }
};

// MRR protocol: each record's docstring queries its own code plus
// `distractor_count` other records, sampled without replacement per query
// (or drawn from one shared pool). When fewer records exist than requested
// distractors, all others are used and the effective count is reported.
inline EvalReport run_code_search_eval(std::span<const CodeSearchRecord> records,
                                       const Scorer& scorer,
                                       const CodeSearchEvalOptions& options = {}) {
  std::size_t n = records.size();
  if (n < 2) throw CorpusTooSmallError(n);

  std::vector<std::size_t> shared_pool;
  if (options.mode == DistractorMode::kSharedPool) {
    SplitMix64 rng(derive_seed(options.seed, "shared-pool"));
    shared_pool = sample_without_replacement(
        n, std::min(options.distractor_count, n), rng);
  }

  long double reciprocal_sum = 0.0L;
  std::size_t effective_min = n, effective_max = 0;
  std::vector<std::size_t> distractors;
  std::vector<double> scores;
  for (std::size_t i = 0; i < n; ++i) {
    distractors.clear();
    if (options.mode == DistractorMode::kPerQuery) {
      SplitMix64 rng(derive_seed(options.seed, "query#" + std::to_string(i)));
      std::size_t want = std::min(options.distractor_count, n - 1);
      for (std::size_t pick : sample_without_replacement(n - 1, want, rng)) {
        distractors.push_back(pick >= i ? pick + 1 : pick);
      }
    } else {
      for (std::size_t pick : shared_pool) {
        if (pick != i) distractors.push_back(pick);
      }
    }
    effective_min = std::min(effective_min, distractors.size());
    effective_max = std::max(effective_max, distractors.size());

    const CodeSearchRecord& query = records[i];
    double gold = scorer.score_pair(query.id, query.docstring_tokens, query.id,
                                    query.code_tokens);
    scores.clear();
    scores.reserve(distractors.size());
    for (std::size_t d : distractors) {
      scores.push_back(scorer.score_pair(query.id, query.docstring_tokens,
                                         records[d].id, records[d].code_tokens));
    }
    std::size_t rank = rank_of_gold(gold, scores, options.tie_break);
    reciprocal_sum += 1.0L / static_cast<long double>(rank);
  }

  EvalReport report;
  report.task = "code-search";
  report.metric = "MRR";
  report.value = static_cast<double>(reciprocal_sum / static_cast<long double>(n));
  report.n = n;
  report.seed = options.seed;
  report.distractors_requested = options.distractor_count;
  report.distractors_effective_min = effective_min;
  report.distractors_effective_max = effective_max;
  report.tie_break = std::string(to_string(options.tie_break));
  report.distractor_mode = std::string(to_string(options.mode));
  return report;
}

struct CloneEvalOptions {
  double threshold = 0.5;
  std::vector<double> sweep;
};

// Clone-mode token lists: the significant (non-layout, non-comment) token
// texts of a function body.
inline std::vector<std::string> significant_token_texts(const std::string& source,
                                                        SourceLanguage language) {
  TokenStream stream = tokenize(source, language);
  std::vector<std::string> texts;
  for (Token& token : stream.tokens) {
    if (token.kind != TokenKind::kLayout && token.kind != TokenKind::kComment) {
      texts.push_back(std::move(token.text));
    }
  }
  return texts;
}

// F1 protocol: a pair is predicted a clone iff similarity >= threshold.
inline EvalReport run_clone_eval(
    const std::map<std::string, std::vector<std::string>>& function_tokens,
    std::span<const ClonePairRecord> pairs, const Scorer& scorer,
    const CloneEvalOptions& options = {}) {
  if (pairs.empty()) throw EmptyInputError("no clone pairs");

  std::vector<double> similarities;
  similarities.reserve(pairs.size());
  for (const ClonePairRecord& pair : pairs) {
    auto a = function_tokens.find(pair.idx1);
    if (a == function_tokens.end()) throw DanglingIndexError(pair.idx1);
    auto b = function_tokens.find(pair.idx2);
    if (b == function_tokens.end()) throw DanglingIndexError(pair.idx2);
    similarities.push_back(
        scorer.score_pair(pair.idx1, a->second, pair.idx2, b->second));
  }

  auto confusion = [&](double threshold) {
    SweepPoint point;
    point.threshold = threshold;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      bool predicted = similarities[i] >= threshold;
      bool actual = pairs[i].label == 1;
      if (predicted && actual) ++point.tp;
      else if (predicted && !actual) ++point.fp;
      else if (!predicted && actual) ++point.fn;
      else ++point.tn;
    }
    point.prf = f1_from_counts(point.tp, point.fp, point.fn);
    return point;
  };

  SweepPoint main = confusion(options.threshold);
  EvalReport report;
  report.task = "clone-detection";
  report.metric = "F1";
  report.value = main.prf.f1;
  report.n = pairs.size();
  report.threshold = options.threshold;
  report.prf = main.prf;
  report.tp = main.tp;
  report.fp = main.fp;
  report.fn = main.fn;
  report.tn = main.tn;
  for (double threshold : options.sweep) {
    report.sweep.push_back(confusion(threshold));
  }
  return report;
}

}  // namespace nameblind

#endif  // NAMEBLIND_EVAL_HPP_
