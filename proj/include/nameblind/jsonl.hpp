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
// Span-level editor for one-line JSON objects. Rewriting a dataset record by
// parse-and-reserialize would re-escape strings and reformat numbers in
// fields we never touched; instead this locates the raw byte span of each
// top-level field and splices replacements in, so untouched fields stay
// byte-identical.

#ifndef NAMEBLIND_JSONL_HPP_
#define NAMEBLIND_JSONL_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nameblind/errors.hpp"

namespace nameblind {

class JsonLineEditor {
 public:
  // Parses the top-level object structure of `line`. Throws FormatError
  // (with `line_number`) on malformed input.
  explicit JsonLineEditor(std::string line, std::size_t line_number = 0)
      : line_(std::move(line)), line_number_(line_number) {
    parse();
  }

  bool has(std::string_view key) const { return find(key) != nullptr; }

  // Raw bytes of the value, as they appear in the line (quotes included for
  // strings). Last occurrence wins if a key repeats.
  std::string_view raw(std::string_view key) const {
    const Field* field = find(key);
    if (field == nullptr) {
      throw FormatError(line_number_, "missing key \"" + std::string(key) + "\"");
    }
    return std::string_view(line_).substr(field->begin, field->end - field->begin);
  }

  // Replaces the value of `key` with already-serialized JSON bytes.
  void replace(std::string_view key, std::string raw_json) {
    Field* field = find(key);
    if (field == nullptr) {
      throw FormatError(line_number_, "missing key \"" + std::string(key) + "\"");
    }
    field->replacement = std::move(raw_json);
  }

  std::string render() const {
    std::string out;
    out.reserve(line_.size());
    std::size_t pos = 0;
    for (const Field& field : fields_) {
      if (!field.replacement.has_value()) continue;
      out += line_.substr(pos, field.begin - pos);
      out += *field.replacement;
      pos = field.end;
    }
    out += line_.substr(pos);
    return out;
  }

  const std::string& original() const { return line_; }

 private:
  struct Field {
    std::string key;
    std::size_t begin = 0;
    std::size_t end = 0;
    std::optional<std::string> replacement;
  };

  const Field* find(std::string_view key) const {
    const Field* hit = nullptr;
    for (const Field& field : fields_) {
      if (field.key == key) hit = &field;
    }
    return hit;
  }
  Field* find(std::string_view key) {
    return const_cast<Field*>(static_cast<const JsonLineEditor*>(this)->find(key));
  }

  [[noreturn]] void fail(const std::string& reason) const {
    throw FormatError(line_number_, reason);
  }

  char peek() const { return pos_ < line_.size() ? line_[pos_] : '\0'; }
  bool at_end() const { return pos_ >= line_.size(); }
  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r' ||
                         peek() == '\n')) {
      ++pos_;
    }
  }

  // Scans a JSON string starting at the opening quote; returns its decoded
  // content and leaves pos_ after the closing quote.
  std::string scan_string() {
    if (peek() != '"') fail("expected string");
    ++pos_;
    std::string out;
    while (true) {
      if (at_end()) fail("unterminated string");
      char c = line_[pos_++];
      if (c == '"') return out;
      if (c != '\\') {
        out += c;
        continue;
      }
      if (at_end()) fail("unterminated escape");
      char esc = line_[pos_++];
      switch (esc) {
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        case '/': out += '/'; break;
        case 'b': out += '\b'; break;
        case 'f': out += '\f'; break;
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 't': out += '\t'; break;
        case 'u': {
          if (pos_ + 4 > line_.size()) fail("truncated \\u escape");
          unsigned value = 0;
          for (int k = 0; k < 4; ++k) {
            char h = line_[pos_++];
            value <<= 4;
            if (h >= '0' && h <= '9') value |= static_cast<unsigned>(h - '0');
            else if (h >= 'a' && h <= 'f') value |= static_cast<unsigned>(h - 'a' + 10);
            else if (h >= 'A' && h <= 'F') value |= static_cast<unsigned>(h - 'A' + 10);
            else fail("bad \\u escape");
          }
          // Keys are compared after decoding; a lossy '?' for non-BMP pairs
          // is fine because dataset keys are plain ASCII.
          if (value < 0x80) {
            out += static_cast<char>(value);
          } else if (value < 0x800) {
            out += static_cast<char>(0xc0 | (value >> 6));
            out += static_cast<char>(0x80 | (value & 0x3f));
          } else {
            out += static_cast<char>(0xe0 | (value >> 12));
            out += static_cast<char>(0x80 | ((value >> 6) & 0x3f));
            out += static_cast<char>(0x80 | (value & 0x3f));
          }
          break;
        }
        default: fail("bad escape");
      }
    }
  }

  void skip_value() {
    skip_ws();
    if (at_end()) fail("missing value");
    char c = peek();
    if (c == '"') {
      scan_string();
      return;
    }
    if (c == '{' || c == '[') {
      char open = c;
      char close = open == '{' ? '}' : ']';
      int depth = 0;
      while (!at_end()) {
        char d = peek();
        if (d == '"') {
          scan_string();
          continue;
        }
        ++pos_;
        if (d == open) ++depth;
        else if (d == close && --depth == 0) return;
      }
      fail("unterminated container");
    }
    // number / true / false / null
    std::size_t start = pos_;
    while (!at_end() && peek() != ',' && peek() != '}' && peek() != ']' &&
           peek() != ' ' && peek() != '\t' && peek() != '\r' && peek() != '\n') {
      ++pos_;
    }
    if (pos_ == start) fail("missing value");
  }

  void parse() {
    pos_ = 0;
    skip_ws();
    if (peek() != '{') fail("expected object");
    ++pos_;
    skip_ws();
    if (peek() == '}') {
      ++pos_;
    } else {
      while (true) {
        skip_ws();
        std::string key = scan_string();
        skip_ws();
        if (peek() != ':') fail("expected ':'");
        ++pos_;
        skip_ws();
        std::size_t begin = pos_;
        skip_value();
        fields_.push_back(Field{std::move(key), begin, pos_, std::nullopt});
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (peek() == '}') {
          ++pos_;
          break;
        }
        fail("expected ',' or '}'");
      }
    }
    skip_ws();
    if (!at_end()) fail("trailing data after object");
  }

  std::string line_;
  std::size_t line_number_;
  std::size_t pos_ = 0;
  std::vector<Field> fields_;
};

}  // namespace nameblind

#endif  // NAMEBLIND_JSONL_HPP_
