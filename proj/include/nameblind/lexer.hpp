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
// Lossless lexical scanners for Java and Python function snippets.
//
// These are scanners, not parsers: they classify every byte of the input into
// kind-annotated tokens without normalizing anything. Whitespace, newlines and
// indentation become Layout tokens, and string literals and comments are kept
// as single opaque tokens, so a rewritten stream can be concatenated back into
// source text that differs from the input only where identifiers were
// replaced.

#ifndef NAMEBLIND_LEXER_HPP_
#define NAMEBLIND_LEXER_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nameblind/errors.hpp"
#include "nameblind/token.hpp"

namespace nameblind {

namespace detail {

// Reserved words of Python 3.7 (35 entries), sorted.
inline constexpr std::array<std::string_view, 35> kPythonKeywords = {
    "False",  "None",     "True",  "and",    "as",     "assert", "async",
    "await",  "break",    "class", "continue", "def",  "del",    "elif",
    "else",   "except",   "finally", "for",  "from",   "global", "if",
    "import", "in",       "is",    "lambda", "nonlocal", "not",  "or",
    "pass",   "raise",    "return", "try",   "while",  "with",   "yield",
};

// Java SE reserved words plus the reserved literals true/false/null, sorted.
inline constexpr std::array<std::string_view, 53> kJavaKeywords = {
    "abstract", "assert",  "boolean",    "break",    "byte",      "case",
    "catch",    "char",    "class",      "const",    "continue",  "default",
    "do",       "double",  "else",       "enum",     "extends",   "false",
    "final",    "finally", "float",      "for",      "goto",      "if",
    "implements", "import", "instanceof", "int",     "interface", "long",
    "native",   "new",     "null",       "package",  "private",   "protected",
    "public",   "return",  "short",      "static",   "strictfp",  "super",
    "switch",   "synchronized", "this",  "throw",    "throws",    "transient",
    "true",     "try",     "void",       "volatile", "while",
};

template <std::size_t N>
bool table_contains(const std::array<std::string_view, N>& table,
                    std::string_view word) {
  return std::binary_search(table.begin(), table.end(), word);
}

inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_ascii_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
inline bool is_hex_digit(char c) {
  return is_ascii_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}
// Bytes >= 0x80 are accepted as identifier characters in both languages and
// passed through verbatim. This over-accepts relative to the exact Unicode
// identifier tables but keeps the scanner byte-oriented and lossless.
inline bool is_ident_start(char c, bool java) {
  return is_ascii_alpha(c) || c == '_' || (java && c == '$') ||
         static_cast<unsigned char>(c) >= 0x80;
}
inline bool is_ident_continue(char c, bool java) {
  return is_ident_start(c, java) || is_ascii_digit(c);
}

class ScannerBase {
 public:
  explicit ScannerBase(std::string_view src) : src_(src) {}

 protected:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  bool at_end() const { return pos_ >= src_.size(); }

  void emit(TokenKind kind, std::size_t begin) {
    out_.push_back(Token{std::string(src_.substr(begin, pos_ - begin)), kind,
                         begin, pos_});
  }

  [[noreturn]] void fail(const std::string& message, std::size_t offset) const {
    throw LexError(message, offset);
  }

  // Maximal run of whitespace. `allow_continuation` additionally folds
  // backslash-newline pairs into the run (Python line continuations).
  void scan_layout(bool allow_continuation) {
    std::size_t begin = pos_;
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
          c == '\v') {
        ++pos_;
      } else if (allow_continuation && c == '\\' &&
                 (peek(1) == '\n' || (peek(1) == '\r' && peek(2) == '\n'))) {
        pos_ += peek(1) == '\r' ? 3 : 2;
      } else {
        break;
      }
    }
    emit(TokenKind::kLayout, begin);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::vector<Token> out_;
};

class PythonScanner : public ScannerBase {
 public:
  using ScannerBase::ScannerBase;

  std::vector<Token> run() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
          c == '\v' ||
          (c == '\\' && (peek(1) == '\n' || (peek(1) == '\r' && peek(2) == '\n')))) {
        scan_layout(/*allow_continuation=*/true);
      } else if (c == '#') {
        scan_comment();
      } else if (is_ident_start(c, /*java=*/false)) {
        scan_word();
      } else if (is_ascii_digit(c) || (c == '.' && is_ascii_digit(peek(1)))) {
        scan_number();
      } else if (c == '"' || c == '\'') {
        scan_string(pos_);
      } else {
        scan_operator();
      }
    }
    return std::move(out_);
  }

 private:
  void scan_comment() {
    std::size_t begin = pos_;
    while (!at_end() && peek() != '\n' && peek() != '\r') ++pos_;
    emit(TokenKind::kComment, begin);
  }

  // Identifier, keyword, or the prefix of a prefixed string literal.
  void scan_word() {
    std::size_t begin = pos_;
    while (!at_end() && is_ident_continue(peek(), false)) ++pos_;
    std::string_view word = src_.substr(begin, pos_ - begin);
    if ((peek() == '"' || peek() == '\'') && is_string_prefix(word)) {
      scan_string(begin);
      return;
    }
    emit(table_contains(kPythonKeywords, word) ? TokenKind::kKeyword
                                               : TokenKind::kIdentifier,
         begin);
  }

  static bool is_string_prefix(std::string_view word) {
    if (word.size() > 2) return false;
    std::string lower;
    for (char c : word) lower.push_back(static_cast<char>(c | 0x20));
    if (lower.size() == 1) {
      return lower == "r" || lower == "b" || lower == "u" || lower == "f";
    }
    return lower == "rb" || lower == "br" || lower == "rf" || lower == "fr";
  }

  // `begin` points at the prefix (if any); pos_ points at the opening quote.
  // Interiors are opaque: f-string fields and escape contents are never
  // re-scanned.
  void scan_string(std::size_t begin) {
    char quote = peek();
    bool triple = peek(1) == quote && peek(2) == quote;
    pos_ += triple ? 3 : 1;
    while (true) {
      if (at_end()) fail("unterminated string literal", begin);
      char c = peek();
      if (c == '\\') {
        if (pos_ + 1 >= src_.size()) fail("unterminated string literal", begin);
        pos_ += 2;  // escape consumes the next byte, even in raw strings
        continue;
      }
      if (!triple && (c == '\n' || c == '\r')) {
        fail("unterminated string literal", begin);
      }
      if (c == quote) {
        if (!triple) {
          ++pos_;
          break;
        }
        if (peek(1) == quote && peek(2) == quote) {
          pos_ += 3;
          break;
        }
      }
      ++pos_;
    }
    emit(TokenKind::kStringLiteral, begin);
  }

  void scan_number() {
    std::size_t begin = pos_;
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
      pos_ += 2;
      while (is_hex_digit(peek()) || peek() == '_') ++pos_;
    } else if (peek() == '0' && (peek(1) == 'o' || peek(1) == 'O' ||
                                 peek(1) == 'b' || peek(1) == 'B')) {
      pos_ += 2;
      while (is_ascii_digit(peek()) || peek() == '_') ++pos_;
    } else {
      while (is_ascii_digit(peek()) || peek() == '_') ++pos_;
      if (peek() == '.') {
        ++pos_;
        while (is_ascii_digit(peek()) || peek() == '_') ++pos_;
      }
      if ((peek() == 'e' || peek() == 'E') &&
          (is_ascii_digit(peek(1)) ||
           ((peek(1) == '+' || peek(1) == '-') && is_ascii_digit(peek(2))))) {
        pos_ += (peek(1) == '+' || peek(1) == '-') ? 2 : 1;
        while (is_ascii_digit(peek()) || peek() == '_') ++pos_;
      }
    }
    if (peek() == 'j' || peek() == 'J') ++pos_;
    emit(TokenKind::kNumberLiteral, begin);
  }

  void scan_operator() {
    static constexpr std::string_view k3[] = {"**=", "//=", ">>=", "<<=", "..."};
    static constexpr std::string_view k2[] = {
        "**", "//", "<<", ">>", "<=", ">=", "==", "!=", "->", "+=", "-=",
        "*=", "/=", "%=", "@=", "&=", "|=", "^=", ":="};
    static constexpr std::string_view k1 = "+-*/%@&|^~<>=.,:;()[]{}";

    std::size_t begin = pos_;
    std::string_view rest = src_.substr(pos_);
    for (std::string_view op : k3) {
      if (rest.substr(0, 3) == op) {
        pos_ += 3;
        emit(TokenKind::kOperator, begin);
        return;
      }
    }
    for (std::string_view op : k2) {
      if (rest.substr(0, 2) == op) {
        pos_ += 2;
        emit(TokenKind::kOperator, begin);
        return;
      }
    }
    char c = peek();
    if (k1.find(c) != std::string_view::npos) {
      ++pos_;
      emit(c == '(' || c == ')' || c == '[' || c == ']' || c == '{' ||
                   c == '}' || c == ',' || c == ';'
               ? TokenKind::kPunctuation
               : TokenKind::kOperator,
           begin);
      return;
    }
    fail(std::string("illegal character '") + c + "'", pos_);
  }
};

class JavaScanner : public ScannerBase {
 public:
  using ScannerBase::ScannerBase;

  std::vector<Token> run() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
          c == '\v') {
        scan_layout(/*allow_continuation=*/false);
      } else if (c == '/' && (peek(1) == '/' || peek(1) == '*')) {
        scan_comment();
      } else if (is_ident_start(c, /*java=*/true)) {
        scan_word();
      } else if (is_ascii_digit(c) || (c == '.' && is_ascii_digit(peek(1)))) {
        scan_number();
      } else if (c == '"') {
        scan_string();
      } else if (c == '\'') {
        scan_char();
      } else {
        scan_operator();
      }
    }
    return std::move(out_);
  }

 private:
  void scan_comment() {
    std::size_t begin = pos_;
    if (peek(1) == '/') {
      while (!at_end() && peek() != '\n' && peek() != '\r') ++pos_;
    } else {
      pos_ += 2;
      while (true) {
        if (at_end()) fail("unterminated block comment", begin);
        if (peek() == '*' && peek(1) == '/') {
          pos_ += 2;
          break;
        }
        ++pos_;
      }
    }
    emit(TokenKind::kComment, begin);
  }

  void scan_word() {
    std::size_t begin = pos_;
    while (!at_end() && is_ident_continue(peek(), true)) ++pos_;
    std::string_view word = src_.substr(begin, pos_ - begin);
    emit(table_contains(kJavaKeywords, word) ? TokenKind::kKeyword
                                             : TokenKind::kIdentifier,
         begin);
  }

  void scan_string() {
    std::size_t begin = pos_;
    if (peek(1) == '"' && peek(2) == '"') {  // text block
      pos_ += 3;
      while (true) {
        if (at_end()) fail("unterminated text block", begin);
        if (peek() == '\\') {
          pos_ += 2;
          continue;
        }
        if (peek() == '"' && peek(1) == '"' && peek(2) == '"') {
          pos_ += 3;
          break;
        }
        ++pos_;
      }
    } else {
      ++pos_;
      while (true) {
        if (at_end() || peek() == '\n' || peek() == '\r') {
          fail("unterminated string literal", begin);
        }
        if (peek() == '\\') {
          if (pos_ + 1 >= src_.size()) fail("unterminated string literal", begin);
          pos_ += 2;
          continue;
        }
        if (peek() == '"') {
          ++pos_;
          break;
        }
        ++pos_;
      }
    }
    emit(TokenKind::kStringLiteral, begin);
  }

  void scan_char() {
    std::size_t begin = pos_;
    ++pos_;
    while (true) {
      if (at_end() || peek() == '\n' || peek() == '\r') {
        fail("unterminated character literal", begin);
      }
      if (peek() == '\\') {
        if (pos_ + 1 >= src_.size()) fail("unterminated character literal", begin);
        pos_ += 2;
        continue;
      }
      if (peek() == '\'') {
        ++pos_;
        break;
      }
      ++pos_;
    }
    emit(TokenKind::kStringLiteral, begin);
  }

  void scan_number() {
    std::size_t begin = pos_;
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
      pos_ += 2;
      while (is_hex_digit(peek()) || peek() == '_') ++pos_;
      if (peek() == '.') {  // hexadecimal floating point
        ++pos_;
        while (is_hex_digit(peek()) || peek() == '_') ++pos_;
      }
      if (peek() == 'p' || peek() == 'P') {
        ++pos_;
        if (peek() == '+' || peek() == '-') ++pos_;
        while (is_ascii_digit(peek())) ++pos_;
      }
    } else if (peek() == '0' && (peek(1) == 'b' || peek(1) == 'B')) {
      pos_ += 2;
      while (is_ascii_digit(peek()) || peek() == '_') ++pos_;
    } else {
      while (is_ascii_digit(peek()) || peek() == '_') ++pos_;
      if (peek() == '.' && is_ascii_digit(peek(1))) {
        ++pos_;
        while (is_ascii_digit(peek()) || peek() == '_') ++pos_;
      } else if (peek() == '.' && !is_ident_start(peek(1), true) &&
                 peek(1) != '.') {
        ++pos_;  // trailing dot as in "1."
        while (is_ascii_digit(peek()) || peek() == '_') ++pos_;
      }
      if ((peek() == 'e' || peek() == 'E') &&
          (is_ascii_digit(peek(1)) ||
           ((peek(1) == '+' || peek(1) == '-') && is_ascii_digit(peek(2))))) {
        pos_ += (peek(1) == '+' || peek(1) == '-') ? 2 : 1;
        while (is_ascii_digit(peek()) || peek() == '_') ++pos_;
      }
    }
    if (peek() == 'l' || peek() == 'L' || peek() == 'f' || peek() == 'F' ||
        peek() == 'd' || peek() == 'D') {
      ++pos_;
    }
    emit(TokenKind::kNumberLiteral, begin);
  }

  void scan_operator() {
    static constexpr std::string_view k4[] = {">>>="};
    static constexpr std::string_view k3[] = {">>>", "<<=", ">>=", "..."};
    static constexpr std::string_view k2[] = {
        "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=", "-=", "*=",
        "/=", "%=", "&=", "|=", "^=", "<<", ">>", "->", "::"};
    static constexpr std::string_view k1 = "+-*/%&|^!~<>=?:.@,;()[]{}";

    std::size_t begin = pos_;
    std::string_view rest = src_.substr(pos_);
    for (std::string_view op : k4) {
      if (rest.substr(0, 4) == op) {
        pos_ += 4;
        emit(TokenKind::kOperator, begin);
        return;
      }
    }
    for (std::string_view op : k3) {
      if (rest.substr(0, 3) == op) {
        pos_ += 3;
        emit(TokenKind::kOperator, begin);
        return;
      }
    }
    for (std::string_view op : k2) {
      if (rest.substr(0, 2) == op) {
        pos_ += 2;
        emit(TokenKind::kOperator, begin);
        return;
      }
    }
    char c = peek();
    if (k1.find(c) != std::string_view::npos) {
      ++pos_;
      emit(c == '(' || c == ')' || c == '[' || c == ']' || c == '{' ||
                   c == '}' || c == ',' || c == ';'
               ? TokenKind::kPunctuation
               : TokenKind::kOperator,
           begin);
      return;
    }
    fail(std::string("illegal character '") + c + "'", pos_);
  }
};

}  // namespace detail

inline bool is_keyword(std::string_view word, SourceLanguage language) {
  return language == SourceLanguage::kPython
             ? detail::table_contains(detail::kPythonKeywords, word)
             : detail::table_contains(detail::kJavaKeywords, word);
}

// Losslessly tokenize `source`. Throws LexError (with a byte offset) on
// unterminated strings/comments and illegal characters; never skips bytes.
inline TokenStream tokenize(std::string_view source, SourceLanguage language) {
  TokenStream stream;
  stream.language = language;
  stream.source = std::string(source);
  if (language == SourceLanguage::kPython) {
    detail::PythonScanner scanner(source);
    stream.tokens = scanner.run();
  } else {
    detail::JavaScanner scanner(source);
    stream.tokens = scanner.run();
  }
  return stream;
}

inline std::string detokenize(const TokenStream& stream) {
  std::string out;
  out.reserve(stream.source.size());
  for (const Token& token : stream.tokens) out += token.text;
  return out;
}

}  // namespace nameblind

#endif  // NAMEBLIND_LEXER_HPP_
