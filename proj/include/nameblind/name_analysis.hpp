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
// Classifies every identifier occurrence in a snippet into one of four
// buckets: Variable, Definition (a function/method defined here), Invocation
// (an unqualified call target), or Preserved (not safe or not meaningful to
// rename). The analysis is purely lexical — snippets are standalone functions
// with no project context, so classification works from token patterns:
//
//   - member/namespace-qualified names (`x.f`, `X::f`) are never renamed, and
//     neither is the root of an attribute chain unless it is bound locally;
//   - language builtins are preserved unless the snippet rebinds them;
//   - type positions (Java declarations, Python annotations) are preserved;
//   - everything else that carries a value is a Variable.
//
// All unqualified occurrences of one name share one symbol and therefore one
// category; definition evidence outranks call evidence, which outranks plain
// use.

#ifndef NAMEBLIND_NAME_ANALYSIS_HPP_
#define NAMEBLIND_NAME_ANALYSIS_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nameblind/errors.hpp"
#include "nameblind/lexer.hpp"
#include "nameblind/token.hpp"

namespace nameblind {

enum class NameCategory { kVariable, kDefinition, kInvocation, kPreserved };

inline std::string_view to_string(NameCategory category) {
  switch (category) {
    case NameCategory::kVariable: return "variable";
    case NameCategory::kDefinition: return "definition";
    case NameCategory::kInvocation: return "invocation";
    case NameCategory::kPreserved: return "preserved";
  }
  return "unknown";
}

struct NameOccurrence {
  std::size_t token_index = 0;
  std::string name;
  NameCategory category = NameCategory::kPreserved;
  bool qualified = false;
};

struct NameInventory {
  // One entry per Identifier token, in token order.
  std::vector<NameOccurrence> occurrences;
  // Category per unqualified symbol.
  std::map<std::string, NameCategory> symbols;
  // Distinct renameable names per category, in first-occurrence order.
  std::vector<std::string> variables;
  std::vector<std::string> definitions;
  std::vector<std::string> invocations;

  struct Stats {
    std::size_t variable_occurrences = 0;
    std::size_t definition_occurrences = 0;
    std::size_t invocation_occurrences = 0;
    std::size_t preserved_occurrences = 0;
    // Unbound names that fell through to Variable by default; a high count
    // flags snippets where the lexical heuristics had little to go on.
    std::size_t fallthrough_variables = 0;
  } stats;
};

namespace detail {

inline const std::set<std::string_view>& python_builtins() {
  static const std::set<std::string_view> kTable = {
      // builtins
      "abs", "aiter", "all", "anext", "any", "ascii", "bin", "bool",
      "breakpoint", "bytearray", "bytes", "callable", "chr", "classmethod",
      "compile", "complex", "delattr", "dict", "dir", "divmod", "enumerate",
      "eval", "exec", "exit", "filter", "float", "format", "frozenset",
      "getattr", "globals", "hasattr", "hash", "help", "hex", "id", "input",
      "int", "isinstance", "issubclass", "iter", "len", "list", "locals",
      "map", "max", "memoryview", "min", "next", "object", "oct", "open",
      "ord", "pow", "print", "property", "quit", "range", "repr", "reversed",
      "round", "set", "setattr", "slice", "sorted", "staticmethod", "str",
      "sum", "super", "tuple", "type", "vars", "zip",
      // singletons that are not keywords
      "Ellipsis", "NotImplemented",
      // exception hierarchy
      "ArithmeticError", "AssertionError", "AttributeError", "BaseException",
      "BlockingIOError", "BrokenPipeError", "BufferError", "BytesWarning",
      "ChildProcessError", "ConnectionAbortedError", "ConnectionError",
      "ConnectionRefusedError", "ConnectionResetError", "DeprecationWarning",
      "EOFError", "EnvironmentError", "Exception", "FileExistsError",
      "FileNotFoundError", "FloatingPointError", "FutureWarning",
      "GeneratorExit", "IOError", "ImportError", "ImportWarning",
      "IndentationError", "IndexError", "InterruptedError",
      "IsADirectoryError", "KeyError", "KeyboardInterrupt", "LookupError",
      "MemoryError", "ModuleNotFoundError", "NameError", "NotADirectoryError",
      "NotImplementedError", "OSError", "OverflowError", "PendingDeprecationWarning",
      "PermissionError", "ProcessLookupError", "RecursionError",
      "ReferenceError", "ResourceWarning", "RuntimeError", "RuntimeWarning",
      "StopAsyncIteration", "StopIteration", "SyntaxError", "SyntaxWarning",
      "SystemError", "SystemExit", "TabError", "TimeoutError", "TypeError",
      "UnboundLocalError", "UnicodeDecodeError", "UnicodeEncodeError",
      "UnicodeError", "UnicodeTranslateError", "UnicodeWarning", "UserWarning",
      "ValueError", "Warning", "ZeroDivisionError",
  };
  return kTable;
}

// Unqualified-reachable standard names in Java are essentially the Object
// protocol; everything else needs a receiver or an explicit static import.
inline const std::set<std::string_view>& java_builtins() {
  static const std::set<std::string_view> kTable = {
      "clone",  "equals", "finalize", "getClass", "hashCode",
      "notify", "notifyAll", "toString", "wait",
  };
  return kTable;
}

inline bool is_dunder(std::string_view name) {
  return name.size() > 4 && name.substr(0, 2) == "__" &&
         name.substr(name.size() - 2) == "__";
}

inline bool is_builtin_name(std::string_view name, SourceLanguage language) {
  if (language == SourceLanguage::kPython) {
    return python_builtins().count(name) > 0 || is_dunder(name);
  }
  return java_builtins().count(name) > 0;
}

// Evidence gathered for a single identifier occurrence.
struct OccurrenceEvidence {
  std::size_t token_index = 0;
  bool qualified = false;    // preceded by `.` or `::`
  bool kwarg = false;        // keyword-argument name at a Python call site
  bool import_name = false;  // module path inside a Python import statement
  bool class_name = false;   // name introduced by class/interface/enum
  bool annotation_use = false;  // Java `@Name`
  bool defpos = false;       // function/method definition name
  bool call = false;         // directly followed by `(`
  bool bound = false;        // parameter, assignment target, alias, declaration
  bool receiver = false;     // directly followed by `.` or `::`
  bool typepos = false;      // type position (declaration type, annotation)

  bool occurrence_preserved() const {
    return qualified || kwarg || import_name || annotation_use;
  }
  bool plain_value_use() const {
    return !qualified && !kwarg && !import_name && !class_name &&
           !annotation_use && !defpos && !call && !receiver && !typepos;
  }
};

// Indices of significant (non-layout, non-comment) tokens plus helpers for
// prev/next queries over them.
class SignificantView {
 public:
  explicit SignificantView(const TokenStream& stream) : stream_(stream) {
    for (std::size_t i = 0; i < stream.tokens.size(); ++i) {
      TokenKind kind = stream.tokens[i].kind;
      if (kind != TokenKind::kLayout && kind != TokenKind::kComment) {
        index_.push_back(i);
      }
    }
  }

  std::size_t size() const { return index_.size(); }
  const Token& at(std::size_t sig_pos) const {
    return stream_.tokens[index_[sig_pos]];
  }
  std::size_t token_index(std::size_t sig_pos) const { return index_[sig_pos]; }

  const Token* prev(std::size_t sig_pos, std::size_t back = 1) const {
    return sig_pos >= back ? &at(sig_pos - back) : nullptr;
  }
  const Token* next(std::size_t sig_pos, std::size_t ahead = 1) const {
    return sig_pos + ahead < size() ? &at(sig_pos + ahead) : nullptr;
  }

  // True if the token at sig_pos is followed by a layout run containing a
  // real newline (used for statement boundaries). Backslash-continuation
  // newlines do not count.
  bool newline_after(std::size_t sig_pos) const {
    std::size_t t = index_[sig_pos] + 1;
    std::size_t stop = sig_pos + 1 < size() ? index_[sig_pos + 1]
                                            : stream_.tokens.size();
    for (; t < stop; ++t) {
      const std::string& text = stream_.tokens[t].text;
      for (std::size_t k = 0; k < text.size(); ++k) {
        if (text[k] != '\n') continue;
        bool continuation =
            (k >= 1 && text[k - 1] == '\\') ||
            (k >= 2 && text[k - 1] == '\r' && text[k - 2] == '\\');
        if (!continuation) return true;
      }
    }
    return false;
  }

 private:
  const TokenStream& stream_;
  std::vector<std::size_t> index_;
};

inline bool text_is(const Token* token, std::string_view text) {
  return token != nullptr && token->text == text;
}
inline bool kind_is(const Token* token, TokenKind kind) {
  return token != nullptr && token->kind == kind;
}
inline bool keyword_is(const Token* token, std::string_view text) {
  return kind_is(token, TokenKind::kKeyword) && token->text == text;
}

inline bool is_assignment_op(const Token* token) {
  if (!kind_is(token, TokenKind::kOperator)) return false;
  const std::string& t = token->text;
  if (t == "=" || t == ":=") return true;
  return t.size() >= 2 && t.back() == '=' && t != "==" && t != "!=" &&
         t != "<=" && t != ">=";
}

// ---------------------------------------------------------------------------
// Python evidence pass
// ---------------------------------------------------------------------------

inline std::vector<OccurrenceEvidence> python_evidence(const TokenStream& stream) {
  SignificantView sig(stream);
  std::vector<OccurrenceEvidence> out;

  enum class Frame { kDefHeader, kCall, kGroup };
  std::vector<Frame> frames;

  bool stmt_start = true;
  bool import_region = false;
  bool global_region = false;
  bool for_target = false;
  std::size_t for_depth = 0;
  bool lambda_params = false;
  std::size_t lambda_depth = 0;
  bool header_annotation = false;  // after ':' inside a def header
  bool return_annotation = false;  // after '->' until the block ':'

  for (std::size_t i = 0; i < sig.size(); ++i) {
    const Token& tok = sig.at(i);
    const Token* prev = sig.prev(i);
    const Token* next = sig.next(i);
    bool at_stmt_start = stmt_start;
    stmt_start = false;

    if (tok.kind == TokenKind::kPunctuation) {
      const std::string& t = tok.text;
      if (t == "(") {
        const Token* prev2 = sig.prev(i, 2);
        if (kind_is(prev, TokenKind::kIdentifier) && keyword_is(prev2, "def")) {
          frames.push_back(Frame::kDefHeader);
        } else if (kind_is(prev, TokenKind::kIdentifier) ||
                   text_is(prev, ")") || text_is(prev, "]")) {
          frames.push_back(Frame::kCall);
        } else {
          frames.push_back(Frame::kGroup);
        }
      } else if (t == "[" || t == "{") {
        frames.push_back(Frame::kGroup);
      } else if (t == ")" || t == "]" || t == "}") {
        if (!frames.empty()) {
          if (frames.back() == Frame::kDefHeader) header_annotation = false;
          frames.pop_back();
        }
      } else if (t == ",") {
        if (!frames.empty() && frames.back() == Frame::kDefHeader) {
          header_annotation = false;
        }
      } else if (t == ";") {
        stmt_start = true;
        import_region = false;
        global_region = false;
      }
    } else if (tok.kind == TokenKind::kOperator) {
      const std::string& t = tok.text;
      if (t == ":") {
        if (!frames.empty() && frames.back() == Frame::kDefHeader) {
          header_annotation = true;
        } else if (frames.empty()) {
          // block colon: `if x:`, `def f():`, `for ...:`
          return_annotation = false;
          stmt_start = true;
        }
      } else if (t == "->") {
        return_annotation = true;
      } else if (t == "=") {
        if (!frames.empty() && frames.back() == Frame::kDefHeader) {
          header_annotation = false;
        }
      }
    } else if (tok.kind == TokenKind::kKeyword) {
      const std::string& t = tok.text;
      if (t == "import" || t == "from") {
        if (at_stmt_start || import_region) import_region = true;
      } else if (t == "for") {
        for_target = true;
        for_depth = frames.size();
      } else if (t == "in") {
        if (for_target && frames.size() == for_depth) for_target = false;
      } else if (t == "lambda") {
        lambda_params = true;
        lambda_depth = frames.size();
      } else if (t == "global" || t == "nonlocal") {
        global_region = true;
      }
    }

    if (tok.kind == TokenKind::kOperator && tok.text == ":" && lambda_params &&
        frames.size() == lambda_depth) {
      lambda_params = false;
    }
    if (global_region && tok.kind != TokenKind::kKeyword &&
        !(tok.kind == TokenKind::kIdentifier || text_is(&tok, ","))) {
      global_region = false;
    }

    if (tok.kind == TokenKind::kIdentifier) {
      OccurrenceEvidence e;
      e.token_index = sig.token_index(i);
      e.qualified = text_is(prev, ".");
      e.receiver = text_is(next, ".");
      e.call = text_is(next, "(");

      if (!e.qualified) {
        if (import_region) {
          if (keyword_is(prev, "as")) {
            e.bound = true;
          } else {
            e.import_name = true;
          }
        } else if (keyword_is(prev, "def")) {
          e.defpos = true;
        } else if (keyword_is(prev, "class")) {
          e.class_name = true;
        } else {
          bool in_def_header =
              !frames.empty() && frames.back() == Frame::kDefHeader;
          bool in_call = !frames.empty() && frames.back() == Frame::kCall;
          if (in_call && text_is(next, "=") &&
              (text_is(prev, "(") || text_is(prev, ","))) {
            e.kwarg = true;
          } else if (in_def_header && header_annotation) {
            e.typepos = true;
          } else if (return_annotation && frames.empty()) {
            e.typepos = true;
          } else if (in_def_header &&
                     (text_is(prev, "(") || text_is(prev, ",") ||
                      text_is(prev, "*") || text_is(prev, "**"))) {
            e.bound = true;  // parameter
          } else if (lambda_params &&
                     (keyword_is(prev, "lambda") || text_is(prev, ",") ||
                      text_is(prev, "*") || text_is(prev, "**"))) {
            e.bound = true;
          } else if (for_target) {
            e.bound = true;
          } else if (keyword_is(prev, "as")) {
            e.bound = true;
          } else if (global_region) {
            e.bound = true;
          } else if (is_assignment_op(next) && !in_call) {
            e.bound = true;
          } else if (text_is(next, ":=")) {
            e.bound = true;
          }
        }
      }
      out.push_back(e);
    }

    if (sig.newline_after(i) && frames.empty()) {
      stmt_start = true;
      import_region = false;
      global_region = false;
      return_annotation = false;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Java evidence pass
// ---------------------------------------------------------------------------

inline bool is_java_type_keyword(const Token* token) {
  if (!kind_is(token, TokenKind::kKeyword)) return false;
  const std::string& t = token->text;
  return t == "void" || t == "int" || t == "long" || t == "short" ||
         t == "byte" || t == "char" || t == "boolean" || t == "float" ||
         t == "double";
}

// Scans a plausible generic argument group starting at `<`; returns the
// significant index of the matching closer, or 0 on failure. `>>`/`>>>`
// operator tokens count as multiple closers.
inline std::size_t scan_angle_group(const SignificantView& sig,
                                    std::size_t open_pos,
                                    std::vector<std::size_t>* inner_idents) {
  int depth = 0;
  std::size_t limit = 64;
  for (std::size_t j = open_pos; j < sig.size() && limit > 0; ++j, --limit) {
    const Token& t = sig.at(j);
    if (t.kind == TokenKind::kOperator) {
      if (t.text == "<") {
        ++depth;
        continue;
      }
      if (t.text == ">" || t.text == ">>" || t.text == ">>>") {
        depth -= static_cast<int>(t.text.size());
        if (depth <= 0) return depth == 0 ? j : 0;
        continue;
      }
      if (t.text == "." || t.text == "&" || t.text == "?") continue;
      return 0;
    }
    if (t.kind == TokenKind::kIdentifier) {
      if (inner_idents != nullptr && j != open_pos) inner_idents->push_back(j);
      continue;
    }
    if (t.kind == TokenKind::kKeyword &&
        (t.text == "extends" || t.text == "super" || is_java_type_keyword(&t))) {
      continue;
    }
    if (t.kind == TokenKind::kPunctuation &&
        (t.text == "," || t.text == "[" || t.text == "]")) {
      continue;
    }
    return 0;
  }
  return 0;
}

// True if the `>`-family token at close_pos plausibly closes a generic group;
// sets *open_pos to the significant index of the matching `<`.
inline bool closes_angle_group(const SignificantView& sig,
                               std::size_t close_pos, std::size_t* open_pos) {
  std::size_t limit = 64;
  for (std::size_t j = close_pos; limit > 0; --limit) {
    const Token& t = sig.at(j);
    if (t.kind == TokenKind::kOperator && t.text == "<") {
      std::size_t end = scan_angle_group(sig, j, nullptr);
      if (end == close_pos) {
        *open_pos = j;
        return true;
      }
    }
    if (j == 0) break;
    --j;
  }
  return false;
}

inline std::vector<OccurrenceEvidence> java_evidence(const TokenStream& stream) {
  SignificantView sig(stream);
  std::vector<OccurrenceEvidence> out;
  // Significant indices of identifiers inside already-seen generic argument
  // groups (`String` in `List<String>`); heads always precede their groups.
  std::set<std::size_t> generic_inner;

  for (std::size_t i = 0; i < sig.size(); ++i) {
    const Token& tok = sig.at(i);
    if (tok.kind != TokenKind::kIdentifier) continue;

    OccurrenceEvidence e;
    e.token_index = sig.token_index(i);
    const Token* prev = sig.prev(i);
    const Token* next = sig.next(i);
    if (generic_inner.count(i) > 0) e.typepos = true;

    e.qualified = text_is(prev, ".") || text_is(prev, "::");
    e.receiver = text_is(next, ".") || text_is(next, "::");
    e.annotation_use = text_is(prev, "@");

    if (!e.qualified && !e.annotation_use) {
      bool after_new = keyword_is(prev, "new");
      bool prev_type_like = kind_is(prev, TokenKind::kIdentifier) ||
                            text_is(prev, "]") || is_java_type_keyword(prev);
      if (kind_is(prev, TokenKind::kOperator) &&
          (prev->text == ">" || prev->text == ">>" || prev->text == ">>>")) {
        std::size_t open_pos = 0;
        if (closes_angle_group(sig, i - 1, &open_pos)) {
          // `List<...> name` is a declaration; `obj.<T>call(...)` is a
          // qualified generic invocation.
          const Token* before_open = open_pos > 0 ? &sig.at(open_pos - 1) : nullptr;
          if (text_is(before_open, ".") || text_is(before_open, "::")) {
            e.qualified = true;
          } else {
            prev_type_like = true;
          }
        }
      }

      if (!e.qualified) {
        if (keyword_is(prev, "class") || keyword_is(prev, "interface") ||
            keyword_is(prev, "enum")) {
          e.class_name = true;
        } else if (after_new || keyword_is(prev, "instanceof") ||
                   keyword_is(prev, "extends") || keyword_is(prev, "implements") ||
                   keyword_is(prev, "throws")) {
          e.typepos = true;
        } else if (text_is(next, "(")) {
          if (prev_type_like) {
            e.defpos = true;
          } else {
            e.call = true;
          }
        } else {
          // Type evidence from what follows.
          if (kind_is(next, TokenKind::kIdentifier)) {
            e.typepos = true;
          } else if (text_is(next, "[") && text_is(sig.next(i, 2), "]")) {
            e.typepos = true;
          } else if (kind_is(next, TokenKind::kOperator) && next->text == "<") {
            std::vector<std::size_t> inner;
            if (scan_angle_group(sig, i + 1, &inner) != 0) {
              e.typepos = true;
              generic_inner.insert(inner.begin(), inner.end());
            }
          } else if (text_is(prev, "(") && text_is(next, ")") &&
                     !tok.text.empty() && tok.text[0] >= 'A' &&
                     tok.text[0] <= 'Z') {
            const Token* after = sig.next(i, 2);
            if (kind_is(after, TokenKind::kIdentifier) ||
                kind_is(after, TokenKind::kNumberLiteral) ||
                kind_is(after, TokenKind::kStringLiteral) ||
                text_is(after, "(") || text_is(after, "!") ||
                text_is(after, "~")) {
              e.typepos = true;  // cast
            }
          }

          if (!e.typepos) {
            if (is_assignment_op(next)) {
              e.bound = true;
            } else if (prev_type_like && !e.receiver) {
              e.bound = true;  // declaration: `It begin`, `int[] xs`
            }
          }
        }
      }
    }

    out.push_back(e);
  }
  return out;
}

}  // namespace detail

// True when `name` is in the language's preserved-name table (builtins and
// the Object protocol for Java; builtins, exceptions and dunders for Python).
inline bool is_builtin_name(std::string_view name, SourceLanguage language) {
  return detail::is_builtin_name(name, language);
}

// Classifies every identifier occurrence in `stream`. Never fails on
// lexically valid input: names the heuristics cannot place fall through to
// Variable and are counted in stats.
inline NameInventory classify_names(const TokenStream& stream) {
  std::vector<detail::OccurrenceEvidence> evidence =
      stream.language == SourceLanguage::kPython
          ? detail::python_evidence(stream)
          : detail::java_evidence(stream);

  struct SymbolEvidence {
    bool force_preserved = false;
    bool defpos = false;
    bool called = false;
    bool bound = false;
    bool any_receiver = false;
    bool any_typepos = false;
    bool any_plain_use = false;
    bool any_unqualified = false;
  };
  std::map<std::string, SymbolEvidence> table;

  for (const auto& e : evidence) {
    const std::string& name = stream.tokens[e.token_index].text;
    SymbolEvidence& s = table[name];
    if (e.qualified || e.kwarg) continue;  // occurrence-local, no evidence
    s.any_unqualified = true;
    if (e.import_name || e.class_name || e.annotation_use) {
      s.force_preserved = true;
      continue;
    }
    s.defpos |= e.defpos;
    s.called |= e.call;
    s.bound |= e.bound;
    s.any_receiver |= e.receiver;
    s.any_typepos |= e.typepos;
    s.any_plain_use |= e.plain_value_use();
  }

  NameInventory inventory;
  std::map<std::string, NameCategory> categories;
  std::set<std::string> fallthrough;

  for (const auto& [name, s] : table) {
    if (!s.any_unqualified) continue;
    bool builtin = detail::is_builtin_name(name, stream.language);
    NameCategory category;
    if (s.force_preserved) {
      category = NameCategory::kPreserved;
    } else if (s.defpos) {
      category = NameCategory::kDefinition;
    } else if (s.called) {
      category = (builtin && !s.bound) ? NameCategory::kPreserved
                                       : NameCategory::kInvocation;
    } else if (builtin && !s.bound) {
      category = NameCategory::kPreserved;
    } else if (stream.language == SourceLanguage::kJava && s.any_typepos &&
               !s.bound) {
      category = NameCategory::kPreserved;
    } else if (!s.bound && s.any_receiver && !s.any_plain_use &&
               !s.any_typepos) {
      // Attribute-chain root that is never bound locally: a module, an
      // imported namespace, or an outer-scope object. Mirrors leaving
      // `std::`/`detail::` roots untouched.
      category = NameCategory::kPreserved;
    } else if (stream.language == SourceLanguage::kPython && s.any_typepos &&
               !s.bound && !s.any_plain_use) {
      category = NameCategory::kPreserved;
    } else {
      category = NameCategory::kVariable;
      if (!s.bound && !s.defpos && !s.called) fallthrough.insert(name);
    }
    categories[name] = category;
  }

  inventory.symbols = categories;
  std::set<std::string> seen_var, seen_def, seen_inv;
  for (const auto& e : evidence) {
    const std::string& name = stream.tokens[e.token_index].text;
    NameOccurrence occ;
    occ.token_index = e.token_index;
    occ.name = name;
    occ.qualified = e.qualified;
    if (e.qualified || e.kwarg) {
      occ.category = NameCategory::kPreserved;
    } else {
      occ.category = categories.at(name);
    }
    switch (occ.category) {
      case NameCategory::kVariable:
        ++inventory.stats.variable_occurrences;
        if (seen_var.insert(name).second) inventory.variables.push_back(name);
        break;
      case NameCategory::kDefinition:
        ++inventory.stats.definition_occurrences;
        if (seen_def.insert(name).second) inventory.definitions.push_back(name);
        break;
      case NameCategory::kInvocation:
        ++inventory.stats.invocation_occurrences;
        if (seen_inv.insert(name).second) inventory.invocations.push_back(name);
        break;
      case NameCategory::kPreserved:
        ++inventory.stats.preserved_occurrences;
        break;
    }
    inventory.occurrences.push_back(std::move(occ));
  }
  inventory.stats.fallthrough_variables = fallthrough.size();
  return inventory;
}

}  // namespace nameblind

#endif  // NAMEBLIND_NAME_ANALYSIS_HPP_
