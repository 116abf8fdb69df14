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
// Shared test helpers: deterministic snippet generators for both languages,
// synthetic corpora, independent metric oracles, and a subprocess runner for
// the CLI.

#ifndef NAMEBLIND_TESTS_TESTUTIL_HPP_
#define NAMEBLIND_TESTS_TESTUTIL_HPP_

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "nameblind/eval.hpp"
#include "nameblind/rng.hpp"
#include "nameblind/token.hpp"

namespace testutil {

using nameblind::SplitMix64;

// ---------------------------------------------------------------------------
// Scratch directories
// ---------------------------------------------------------------------------

class TempDir {
 public:
  TempDir() {
    std::string tmpl = (std::filesystem::temp_directory_path() /
                        "nameblind-test-XXXXXX").string();
    std::vector<char> buffer(tmpl.begin(), tmpl.end());
    buffer.push_back('\0');
    if (mkdtemp(buffer.data()) == nullptr) {
      throw std::runtime_error("mkdtemp failed");
    }
    path_ = buffer.data();
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path path() const { return path_; }
  std::filesystem::path file(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_file(const std::filesystem::path& path,
                       const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

// ---------------------------------------------------------------------------
// CLI subprocess runner
// ---------------------------------------------------------------------------

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

#ifdef NAMEBLIND_CLI_PATH
inline CliResult run_cli(const std::string& args,
                         const std::string& env_prefix = "") {
  TempDir scratch;
  std::filesystem::path err_path = scratch.file("stderr.txt");
  std::string command = (env_prefix.empty() ? "" : env_prefix + " ") +
                        std::string("\"") + NAMEBLIND_CLI_PATH + "\" " + args +
                        " 2>" + err_path.string();
  FILE* pipe = popen(command.c_str(), "r");
  CliResult result;
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.out.append(buffer, n);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.err = read_file(err_path);
  return result;
}
#endif

// ---------------------------------------------------------------------------
// Snippet generators
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& word_bank() {
  static const std::vector<std::string> kWords = {
      "alpha", "bravo", "charlie", "delta", "echo", "foxtrot", "golf",
      "hotel", "india", "juliet", "kilo", "lima", "mike", "november",
      "oscar", "papa", "quebec", "romeo", "sierra", "tango", "uniform",
      "victor", "whiskey", "xray", "yankee", "zulu"};
  return kWords;
}

inline std::string pick(const std::vector<std::string>& options, SplitMix64& rng) {
  return options[static_cast<std::size_t>(rng.below(options.size()))];
}

// Variable-ish names, including ones designed to stress the rewriter:
// builtin shadows, sequential-scheme collisions, keyword lookalikes.
inline std::string gen_name(SplitMix64& rng) {
  switch (rng.below(8)) {
    case 0: return pick(word_bank(), rng) + "_" + pick(word_bank(), rng);
    case 1: {
      std::string a = pick(word_bank(), rng), b = pick(word_bank(), rng);
      b[0] = static_cast<char>(b[0] - 'a' + 'A');
      return a + b;  // camelCase
    }
    case 2: return pick(word_bank(), rng) + std::to_string(rng.below(100));
    case 3: return "var" + std::to_string(1 + rng.below(4));
    case 4: return "fun" + std::to_string(1 + rng.below(3));
    case 5: return pick({"next", "list", "id", "input", "format"}, rng);
    case 6: return pick({"for_", "if2", "While", "Return"}, rng);
    default: return pick(word_bank(), rng);
  }
}

inline std::string gen_python_expr(const std::vector<std::string>& names,
                                   SplitMix64& rng, int depth = 0) {
  auto name = [&]() { return names[rng.below(names.size())]; };
  switch (depth > 1 ? rng.below(4) : rng.below(8)) {
    case 0: return name();
    case 1: return std::to_string(rng.below(1000));
    case 2: return name() + " + " + std::to_string(rng.below(10));
    case 3: return "\"" + pick(word_bank(), rng) + " " + name() + "\"";
    case 4: return "len(" + name() + ")";
    case 5: return "helpers.scale(" + name() + ", " +
                   std::to_string(rng.below(8)) + ")";
    case 6: return gen_python_expr(names, rng, depth + 1) + " * " + name();
    default: return name() + "[" +
                    std::to_string(rng.below(4)) + "]";
  }
}

// A deterministic, lexically valid Python function with a mix of parameters,
// locals, nested blocks, qualified and builtin calls, comments and strings.
inline std::string gen_python_snippet(std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::ostringstream out;
  std::vector<std::string> names;
  std::string fn = gen_name(rng) + "_" + std::to_string(rng.below(1000));

  std::size_t params = 1 + rng.below(3);
  out << "def " << fn << "(";
  for (std::size_t i = 0; i < params; ++i) {
    std::string p = gen_name(rng);
    while (std::find(names.begin(), names.end(), p) != names.end()) {
      p = gen_name(rng);
    }
    names.push_back(p);
    out << (i > 0 ? ", " : "") << p;
  }
  out << "):\n";
  if (rng.below(3) == 0) {
    out << "    \"\"\"" << pick(word_bank(), rng) << " " << names[0]
        << " helper.\"\"\"\n";
  }

  std::size_t statements = 3 + rng.below(5);
  std::string indent = "    ";
  for (std::size_t s = 0; s < statements; ++s) {
    switch (rng.below(7)) {
      case 0: {
        std::string v = gen_name(rng);
        names.push_back(v);
        out << indent << v << " = " << gen_python_expr(names, rng) << "\n";
        break;
      }
      case 1:
        out << indent << "# " << pick(word_bank(), rng) << " "
            << names[rng.below(names.size())] << "\n";
        break;
      case 2:
        out << indent << "if " << names[rng.below(names.size())] << " > "
            << rng.below(10) << ":\n"
            << indent << "    " << names[rng.below(names.size())] << " = "
            << gen_python_expr(names, rng) << "\n";
        break;
      case 3: {
        std::string loop_var = gen_name(rng);
        names.push_back(loop_var);
        out << indent << "for " << loop_var << " in range("
            << 1 + rng.below(9) << "):\n"
            << indent << "    " << names[rng.below(names.size())] << " += "
            << loop_var << "\n";
        break;
      }
      case 4:
        out << indent << "print(" << names[rng.below(names.size())] << ")\n";
        break;
      case 5:
        out << indent << gen_name(rng) << "_impl("
            << names[rng.below(names.size())] << ")\n";
        break;
      default:
        out << indent << "util.log(\"" << pick(word_bank(), rng) << "\", "
            << names[rng.below(names.size())] << ")\n";
        break;
    }
  }
  out << indent << "return " << names[rng.below(names.size())] << "\n";
  return out.str();
}

inline std::string gen_java_expr(const std::vector<std::string>& names,
                                 SplitMix64& rng, int depth = 0) {
  auto name = [&]() { return names[rng.below(names.size())]; };
  switch (depth > 1 ? rng.below(3) : rng.below(7)) {
    case 0: return name();
    case 1: return std::to_string(rng.below(1000));
    case 2: return name() + " + " + std::to_string(rng.below(10));
    case 3: return "\"" + pick(word_bank(), rng) + " " + name() + "\"";
    case 4: return "Math.max(" + name() + ", " + std::to_string(rng.below(16)) + ")";
    case 5: return gen_java_expr(names, rng, depth + 1) + " * " + name();
    default: return name() + ".length()";
  }
}

inline std::string gen_java_snippet(std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::ostringstream out;
  std::vector<std::string> names;
  std::string fn = gen_name(rng) + std::to_string(rng.below(1000));

  const std::vector<std::string> types = {"int", "long", "String", "double"};
  out << (rng.below(2) == 0 ? "public static " : "private ")
      << pick({"int", "void", "String"}, rng) << " " << fn << "(";
  std::size_t params = 1 + rng.below(3);
  for (std::size_t i = 0; i < params; ++i) {
    std::string p = gen_name(rng);
    while (std::find(names.begin(), names.end(), p) != names.end()) {
      p = gen_name(rng);
    }
    names.push_back(p);
    out << (i > 0 ? ", " : "") << pick(types, rng) << " " << p;
  }
  out << ") {\n";
  if (rng.below(4) == 0) out << "    /* " << pick(word_bank(), rng) << " */\n";

  std::size_t statements = 3 + rng.below(5);
  for (std::size_t s = 0; s < statements; ++s) {
    switch (rng.below(7)) {
      case 0: {
        std::string v = gen_name(rng);
        names.push_back(v);
        out << "    " << pick(types, rng) << " " << v << " = "
            << gen_java_expr(names, rng) << ";\n";
        break;
      }
      case 1:
        out << "    // " << pick(word_bank(), rng) << " "
            << names[rng.below(names.size())] << "\n";
        break;
      case 2:
        out << "    if (" << names[rng.below(names.size())] << " > "
            << rng.below(10) << ") {\n"
            << "        " << names[rng.below(names.size())] << " = "
            << gen_java_expr(names, rng) << ";\n    }\n";
        break;
      case 3: {
        std::string loop_var = gen_name(rng);
        names.push_back(loop_var);
        out << "    for (int " << loop_var << " = 0; " << loop_var << " < "
            << 1 + rng.below(9) << "; " << loop_var << "++) {\n"
            << "        " << names[rng.below(names.size())] << " += "
            << loop_var << ";\n    }\n";
        break;
      }
      case 4:
        out << "    System.out.println(" << names[rng.below(names.size())]
            << ");\n";
        break;
      case 5:
        out << "    " << gen_name(rng) << "Impl("
            << names[rng.below(names.size())] << ");\n";
        break;
      default: {
        std::string v = gen_name(rng);
        names.push_back(v);
        out << "    List<String> " << v << " = new ArrayList<String>();\n"
            << "    " << v << ".add(\"" << pick(word_bank(), rng) << "\");\n";
        break;
      }
    }
  }
  out << "    return" << (rng.below(2) == 0
                              ? " " + names[rng.below(names.size())]
                              : std::string())
      << ";\n}\n";
  return out.str();
}

inline std::string gen_snippet(nameblind::SourceLanguage language,
                               std::uint64_t seed) {
  return language == nameblind::SourceLanguage::kPython
             ? gen_python_snippet(seed)
             : gen_java_snippet(seed);
}

// ---------------------------------------------------------------------------
// Synthetic corpora
// ---------------------------------------------------------------------------

// One record of the separable corpus: the docstring words appear only in the
// record's own identifiers (definition, variables, and one invocation), so
// the lexical baseline ranks the gold snippet first until names are
// anonymized.
struct TripleRecord {
  std::string code;
  std::vector<std::string> code_tokens;
  std::vector<std::string> docstring_tokens;
  std::string url;
};

inline TripleRecord make_triple_record(std::size_t index, const std::string& a,
                                       const std::string& b,
                                       const std::string& c) {
  TripleRecord record;
  record.code = "def " + a + "_" + b + "(" + c + "_arg):\n" +
                "    " + c + "_item = " + c + "_arg + 1\n" +
                "    " + b + "_total = " + a + "_" + c + "(" + c + "_item)\n" +
                "    return " + b + "_total\n";
  record.code_tokens = nameblind::significant_token_texts(
      record.code, nameblind::SourceLanguage::kPython);
  record.docstring_tokens = {a, b, c};
  record.url = "synthetic://record/" + std::to_string(index);
  return record;
}

inline std::string code_search_line(const TripleRecord& record) {
  nlohmann::ordered_json j;
  j["url"] = record.url;
  j["language"] = "python";
  j["code"] = record.code;
  j["code_tokens"] = record.code_tokens;
  j["docstring"] = record.docstring_tokens[0] + " " +
                   record.docstring_tokens[1] + " " + record.docstring_tokens[2];
  j["docstring_tokens"] = record.docstring_tokens;
  return j.dump();
}

// n records with distinct word triples.
inline void write_triple_corpus(const std::filesystem::path& path, std::size_t n) {
  const std::vector<std::string>& words = word_bank();
  std::ofstream out(path, std::ios::binary);
  std::size_t written = 0;
  for (std::size_t i = 0; i < words.size() && written < n; ++i) {
    for (std::size_t j = i + 1; j < words.size() && written < n; ++j) {
      for (std::size_t k = j + 1; k < words.size() && written < n; ++k) {
        out << code_search_line(
                   make_triple_record(written, words[i], words[j], words[k]))
            << "\n";
        ++written;
      }
    }
  }
}

// Fixture corpus whose extra fields use formatting a JSON round-trip would
// not preserve (escaped slashes, trailing zeros, \u escapes).
inline void write_fixture_corpus(const std::filesystem::path& path,
                                 std::size_t n) {
  std::ofstream out(path, std::ios::binary);
  for (std::size_t i = 0; i < n; ++i) {
    SplitMix64 rng(i);
    std::string code = gen_python_snippet(i * 7919 + 13);
    nlohmann::ordered_json code_json = code;
    nlohmann::ordered_json tokens = nameblind::significant_token_texts(
        code, nameblind::SourceLanguage::kPython);
    out << "{\"repo\":\"example\\/repo-" << i << "\","
        << "\"url\":\"https:\\/\\/example.test\\/" << i << "\","
        << "\"language\":\"python\","
        << "\"code\":" << code_json.dump() << ","
        << "\"code_tokens\":" << tokens.dump() << ","
        << "\"docstring\":\"fixture r\\u00e9cord " << i << "\","
        << "\"docstring_tokens\":[\"fixture\",\"record\"],"
        << "\"stars\":" << (i % 50) << ".50,"
        << "\"partition\":\"test\","
        << "\"meta\":{\"nested\":[1,2,{\"z\":null,\"ok\":true}]}}"
        << "\n";
  }
}

// ---------------------------------------------------------------------------
// Independent oracles
// ---------------------------------------------------------------------------

// Rank by explicit sort-and-scan: candidates are (score, is_gold) pairs;
// pessimistic puts gold after equal scores, optimistic before.
inline std::size_t oracle_rank(double gold_score,
                               const std::vector<double>& distractors,
                               bool pessimistic) {
  std::vector<std::pair<double, int>> rows;  // (score, gold flag)
  rows.reserve(distractors.size() + 1);
  for (double s : distractors) rows.emplace_back(s, 0);
  rows.emplace_back(gold_score, 1);
  std::stable_sort(rows.begin(), rows.end(), [&](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return pessimistic ? x.second < y.second : x.second > y.second;
  });
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].second == 1) return r + 1;
  }
  return rows.size();
}

inline double oracle_mean(const std::vector<double>& values) {
  long double sum = 0.0L;
  for (double v : values) sum += v;
  return static_cast<double>(sum / static_cast<long double>(values.size()));
}

// Confusion-matrix enumeration over label/prediction vectors.
struct OracleF1 {
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
  double precision = 0, recall = 0, f1 = 0;
};

inline OracleF1 oracle_f1(const std::vector<int>& labels,
                          const std::vector<int>& predictions) {
  OracleF1 result;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (predictions[i] == 1 && labels[i] == 1) ++result.tp;
    else if (predictions[i] == 1) ++result.fp;
    else if (labels[i] == 1) ++result.fn;
    else ++result.tn;
  }
  result.precision =
      result.tp + result.fp == 0
          ? 0.0
          : double(result.tp) / double(result.tp + result.fp);
  result.recall = result.tp + result.fn == 0
                      ? 0.0
                      : double(result.tp) / double(result.tp + result.fn);
  result.f1 = result.precision + result.recall == 0.0
                  ? 0.0
                  : 2 * result.precision * result.recall /
                        (result.precision + result.recall);
  return result;
}

}  // namespace testutil

#endif  // NAMEBLIND_TESTS_TESTUTIL_HPP_
