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

#ifndef NAMEBLIND_ERRORS_HPP_
#define NAMEBLIND_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nameblind {

// Root of the toolkit's error hierarchy. Everything thrown on purpose
// derives from this, so callers can catch one type at the CLI boundary.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Lexical scan failure. `offset` is the byte position of the offending input.
class LexError : public Error {
 public:
  LexError(const std::string& message, std::size_t offset)
      : Error(message + " at byte " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class UnsupportedLanguageError : public Error {
 public:
  explicit UnsupportedLanguageError(const std::string& name)
      : Error("unsupported language: " + name) {}
};

class InvalidConfigError : public Error {
 public:
  explicit InvalidConfigError(const std::string& message)
      : Error("invalid config: " + message) {}
};

// Shuffling could not find a collision-free replacement assignment.
class PoolExhaustedError : public Error {
 public:
  explicit PoolExhaustedError(const std::string& message)
      : Error("name pool exhausted: " + message) {}
};

class InconsistentInventoryError : public Error {
 public:
  explicit InconsistentInventoryError(const std::string& message)
      : Error("inventory does not match token stream: " + message) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error(message) {}
};

// Malformed input record. `line` is 1-based.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A clone pair references a function index that is not in the corpus.
class DanglingIndexError : public Error {
 public:
  explicit DanglingIndexError(const std::string& idx)
      : Error("dangling function index: " + idx), idx_(idx) {}
  const std::string& idx() const { return idx_; }

 private:
  std::string idx_;
};

class EmptyInputError : public Error {
 public:
  explicit EmptyInputError(const std::string& what_input)
      : Error("empty input: " + what_input) {}
};

class CorpusTooSmallError : public Error {
 public:
  explicit CorpusTooSmallError(std::size_t size)
      : Error("corpus too small for evaluation: " + std::to_string(size) +
              " record(s), need at least 2") {}
};

class MissingScoreError : public Error {
 public:
  MissingScoreError(const std::string& query, const std::string& candidate)
      : Error("no imported score for pair (" + query + ", " + candidate + ")") {}
};

}  // namespace nameblind

#endif  // NAMEBLIND_ERRORS_HPP_
