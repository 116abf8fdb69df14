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

#ifndef NAMEBLIND_TOKEN_HPP_
#define NAMEBLIND_TOKEN_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nameblind {

enum class SourceLanguage { kJava, kPython };

inline std::string_view to_string(SourceLanguage language) {
  return language == SourceLanguage::kJava ? "java" : "python";
}

inline std::optional<SourceLanguage> parse_language(std::string_view name) {
  std::string lower;
  lower.reserve(name.size());
  for (char c : name) {
    lower.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
  }
  if (lower == "java") return SourceLanguage::kJava;
  if (lower == "python") return SourceLanguage::kPython;
  return std::nullopt;
}

enum class TokenKind {
  kKeyword,
  kIdentifier,
  kOperator,
  kPunctuation,
  kNumberLiteral,
  kStringLiteral,
  kComment,
  kLayout,
};

inline std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kKeyword: return "keyword";
    case TokenKind::kIdentifier: return "identifier";
    case TokenKind::kOperator: return "operator";
    case TokenKind::kPunctuation: return "punctuation";
    case TokenKind::kNumberLiteral: return "number";
    case TokenKind::kStringLiteral: return "string";
    case TokenKind::kComment: return "comment";
    case TokenKind::kLayout: return "layout";
  }
  return "unknown";
}

// One lexical unit. `text` holds the verbatim source bytes; [begin, end) is
// the half-open byte span in the original source.
struct Token {
  std::string text;
  TokenKind kind = TokenKind::kLayout;
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const Token&) const = default;
};

// Token spans partition [0, source.size()): sorted, adjacent, gap-free, so
// concatenating `text` over `tokens` reproduces `source` byte for byte.
struct TokenStream {
  SourceLanguage language = SourceLanguage::kPython;
  std::string source;
  std::vector<Token> tokens;
};

}  // namespace nameblind

#endif  // NAMEBLIND_TOKEN_HPP_
