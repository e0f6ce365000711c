// Copyright 2026 The n3s Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surfaces/parser.hpp"

namespace surfaces {

namespace {

std::string describe(ParseError::Kind kind, const SourceSpan& span, const std::string& message) {
  return std::string(to_string(kind)) + " at line " + std::to_string(span.line) + ", column " +
         std::to_string(span.column) + ": " + message;
}

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_high(char c) { return static_cast<unsigned char>(c) >= 0x80; }
bool is_hex(char c) {
  return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}
bool is_name_start(char c) { return is_alpha(c) || c == '_' || is_high(c); }
bool is_name_char(char c) { return is_name_start(c) || is_digit(c) || c == '-'; }

bool has_scheme(std::string_view iri) {
  if (iri.empty() || !is_alpha(iri[0])) return false;
  for (char c : iri) {
    if (c == ':') return true;
    if (!is_alpha(c) && !is_digit(c) && c != '+' && c != '-' && c != '.') return false;
  }
  return false;
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Resolution of a relative reference against a base, enough for the
// `<#frag>`, `</path>` and `<name>` forms found in hand-written files.
std::string resolve_iri(const std::string& base, const std::string& ref) {
  if (ref.empty()) return base;
  if (ref[0] == '#') return base.substr(0, base.find('#')) + ref;
  auto scheme_end = base.find("://");
  if (ref[0] == '/') {
    if (scheme_end == std::string::npos) return base.substr(0, base.find(':') + 1) + ref;
    auto authority_end = base.find('/', scheme_end + 3);
    return base.substr(0, authority_end) + ref;
  }
  auto stem = base.substr(0, base.find('#'));
  auto slash = stem.rfind('/');
  if (slash == std::string::npos || (scheme_end != std::string::npos && slash < scheme_end + 3))
    return stem + "/" + ref;
  return stem.substr(0, slash + 1) + ref;
}

struct ListEntry {
  std::string label;
  SourceSpan span;
};

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : text_(text), options_(options) {
    line_starts_.push_back(0);
    for (std::size_t i = 0; i < text_.size(); ++i)
      if (text_[i] == '\n') line_starts_.push_back(i + 1);
    doc_.prefixes = options.initial_prefixes;
    doc_.next_graffiti_id = options.first_graffiti_id;
    doc_.root.kind = SurfaceKind::Positive;
    doc_.root.span = span(0, text_.size());
  }

  Document run() {
    skip_ws();
    while (!eof()) {
      statement(doc_.root, 0);
      skip_ws();
    }
    return close_blank_nodes(std::move(doc_));
  }

 private:
  // -- positions and errors -------------------------------------------------

  SourceSpan span(std::size_t start, std::size_t end) const {
    start = std::min(start, text_.size());
    end = std::clamp(end, start, text_.size());
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), start);
    std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
    return SourceSpan{start, end, line, start - line_starts_[line - 1] + 1};
  }

  [[noreturn]] void fail(ParseError::Kind kind, std::size_t start, std::size_t end,
                         const std::string& message) const {
    throw ParseError(kind, span(start, end), message);
  }

  [[noreturn]] void unexpected(const std::string& expected) const {
    std::string found = eof() ? "end of input" : "'" + std::string(1, text_[pos_]) + "'";
    fail(ParseError::Kind::UnexpectedToken, pos_, pos_ + (eof() ? 0 : 1),
         "expected " + expected + ", found " + found);
  }

  bool eof() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool looking_at(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  bool looking_at_keyword(std::string_view word, bool case_insensitive = false) const {
    if (text_.size() - pos_ < word.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i) {
      char a = text_[pos_ + i], b = word[i];
      if (case_insensitive) {
        a = static_cast<char>(std::tolower(static_cast<unsigned char>(a)));
        b = static_cast<char>(std::tolower(static_cast<unsigned char>(b)));
      }
      if (a != b) return false;
    }
    char next = peek(word.size());
    return !(is_name_char(next) || next == ':' || (next == '.' && is_name_char(peek(word.size() + 1))));
  }

  void skip_ws() {
    while (!eof()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++pos_;
      } else if (c == '#') {
        while (!eof() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (peek() != c || eof()) unexpected(what);
    ++pos_;
  }

  // -- statements -----------------------------------------------------------

  void statement(HGraph& target, std::size_t depth) {
    if (looking_at("@prefix")) {
      pos_ += 7;
      prefix_directive(true);
      return;
    }
    if (looking_at("@base")) {
      pos_ += 5;
      base_directive(true);
      return;
    }
    if (looking_at_keyword("PREFIX", true)) {
      pos_ += 6;
      prefix_directive(false);
      return;
    }
    if (looking_at_keyword("BASE", true)) {
      pos_ += 4;
      base_directive(false);
      return;
    }
    triples(target, depth);
    skip_ws();
    if (peek() == '.' && !eof()) {
      ++pos_;
    } else if (!(depth > 0 && peek() == '}')) {
      unexpected("'.'");
    }
  }

  void prefix_directive(bool dotted) {
    skip_ws();
    std::size_t start = pos_;
    std::string label;
    if (is_alpha(peek()) || is_high(peek())) {
      while (!eof() && (is_name_char(peek()) || (peek() == '.' && is_name_char(peek(1)))))
        label += text_[pos_++];
    }
    if (peek() != ':') {
      pos_ = start;
      unexpected("prefix label ending in ':'");
    }
    ++pos_;
    skip_ws();
    std::string ns = iri_ref();
    doc_.prefixes[label] = std::move(ns);
    if (dotted) expect('.', "'.' after @prefix");
  }

  void base_directive(bool dotted) {
    skip_ws();
    doc_.base = iri_ref();
    if (dotted) expect('.', "'.' after @base");
  }

  void triples(HGraph& target, std::size_t depth) {
    skip_ws();
    std::size_t start = pos_;
    if (peek() == '(') {
      auto labels = graffiti_list();
      surface_objects(target, depth, labels, start);
      return;
    }
    if (peek() == '{') unexpected("subject (quoted graphs are only allowed as surface objects)");
    Term subject = term();
    SourceSpan subject_span = span(start, pos_);
    for (;;) {
      skip_ws();
      Term predicate = verb();
      if (const auto* iri = std::get_if<Iri>(&predicate); iri && iri->value == kOnNegativeSurface)
        throw ParseError(ParseError::Kind::NonListSubjectForSurface, subject_span,
                         "the subject of log:onNegativeSurface must be a graffiti list");
      for (;;) {
        skip_ws();
        if (peek() == '{')
          unexpected("object (quoted graphs are only allowed as surface objects)");
        if (peek() == '(') unexpected("object (lists are only allowed as surface subjects)");
        Term object = term();
        target.contents.emplace_back(Triple{subject, predicate, std::move(object), span(start, pos_)});
        skip_ws();
        if (peek() != ',') break;
        ++pos_;
      }
      if (!more_predicates()) break;
    }
  }

  // After `;` there may be another predicate, or nothing before the terminator.
  bool more_predicates() {
    skip_ws();
    if (peek() != ';') return false;
    while (peek() == ';') {
      ++pos_;
      skip_ws();
    }
    return !(peek() == '.' || peek() == '}' || eof());
  }

  std::vector<ListEntry> graffiti_list() {
    ++pos_;  // '('
    std::vector<ListEntry> labels;
    for (;;) {
      skip_ws();
      if (eof()) unexpected("')'");
      if (peek() == ')') {
        ++pos_;
        return labels;
      }
      if (!looking_at("_:")) unexpected("blank node in graffiti list");
      std::size_t start = pos_;
      std::string label = blank_label();
      labels.push_back({std::move(label), span(start, pos_)});
    }
  }

  void surface_objects(HGraph& target, std::size_t depth, const std::vector<ListEntry>& labels,
                       std::size_t start) {
    for (;;) {
      skip_ws();
      Term predicate = verb();
      const auto* iri = std::get_if<Iri>(&predicate);
      if (!iri || iri->value != kOnNegativeSurface)
        fail(ParseError::Kind::UnexpectedToken, start, pos_,
             "a graffiti list may only be the subject of log:onNegativeSurface");
      for (;;) {
        skip_ws();
        if (peek() != '{') unexpected("'{' opening a surface");
        target.contents.emplace_back(Box<HGraph>(surface(labels, depth + 1, start)));
        skip_ws();
        if (peek() != ',') break;
        ++pos_;
      }
      if (!more_predicates()) break;
    }
  }

  HGraph surface(const std::vector<ListEntry>& labels, std::size_t depth, std::size_t start) {
    std::size_t open = pos_;
    if (depth > options_.max_nesting)
      fail(ParseError::Kind::NestingTooDeep, open, open + 1,
           "surfaces nested deeper than " + std::to_string(options_.max_nesting));
    ++pos_;  // '{'

    HGraph g;
    g.kind = SurfaceKind::Negative;
    std::vector<std::string> declared;
    for (const auto& entry : labels) {
      bool dup = std::find(declared.begin(), declared.end(), entry.label) != declared.end();
      for (const auto& scope : scopes_)
        dup = dup || std::find(scope.begin(), scope.end(), entry.label) != scope.end();
      if (dup)
        throw ParseError(ParseError::Kind::DuplicateGraffitiDeclaration, entry.span,
                         "graffiti _:" + entry.label + " is already declared on an enclosing surface");
      declared.push_back(entry.label);
      g.graffiti.push_back(doc_.fresh_graffiti(entry.label));
    }
    scopes_.push_back(std::move(declared));
    for (;;) {
      skip_ws();
      if (eof())
        fail(ParseError::Kind::UnclosedGraph, open, open + 1, "'{' is never closed");
      if (peek() == '}') {
        ++pos_;
        break;
      }
      statement(g, depth);
    }
    scopes_.pop_back();
    g.span = span(start, pos_);
    return g;
  }

  // -- terms ----------------------------------------------------------------

  Term verb() {
    if (peek() == 'a' && !is_name_char(peek(1)) && peek(1) != ':') {
      ++pos_;
      return make_iri(kRdfType);
    }
    if (peek() == '"' || peek() == '\'' || is_digit(peek()) || peek() == '(' || peek() == '{' ||
        peek() == '[')
      unexpected("predicate");
    return term();
  }

  Term term() {
    skip_ws();
    if (eof()) unexpected("term");
    char c = peek();
    if (c == '<') return make_iri(iri_ref());
    if (looking_at("_:")) return BlankNode{blank_label()};
    if (c == '"' || c == '\'') return string_literal();
    if (is_digit(c) || ((c == '+' || c == '-' || c == '.') && is_digit(peek(1))) ||
        ((c == '+' || c == '-') && peek(1) == '.' && is_digit(peek(2))))
      return numeric_literal();
    if (looking_at_keyword("true")) {
      pos_ += 4;
      return make_literal("true", std::string(kXsdNs) + "boolean");
    }
    if (looking_at_keyword("false")) {
      pos_ += 5;
      return make_literal("false", std::string(kXsdNs) + "boolean");
    }
    if (is_name_start(c) || c == ':') return make_iri(prefixed_name());
    unexpected("term");
  }

  std::string iri_ref() {
    skip_ws();
    if (peek() != '<') unexpected("'<'");
    std::size_t start = pos_++;
    std::string value;
    for (;;) {
      if (eof()) fail(ParseError::Kind::BadIri, start, pos_, "unterminated IRI");
      char c = text_[pos_];
      if (c == '>') break;
      if (c == '\\') {
        char kind = peek(1);
        std::size_t digits = kind == 'u' ? 4 : kind == 'U' ? 8 : 0;
        if (digits == 0) fail(ParseError::Kind::BadIri, pos_, pos_ + 2, "bad escape in IRI");
        value += unicode_escape(digits, ParseError::Kind::BadIri);
        continue;
      }
      if (c == ' ' || c == '\n' || c == '\t' || c == '<' || c == '"' || c == '{' || c == '}' ||
          c == '|' || c == '^' || c == '`')
        fail(ParseError::Kind::BadIri, pos_, pos_ + 1,
             std::string("character '") + c + "' is not allowed in an IRI");
      value += c;
      ++pos_;
    }
    ++pos_;
    if (!has_scheme(value)) {
      if (!doc_.base) fail(ParseError::Kind::BadIri, start, pos_, "relative IRI <" + value + "> with no @base");
      value = resolve_iri(*doc_.base, value);
    }
    return value;
  }

  std::string unicode_escape(std::size_t digits, ParseError::Kind kind) {
    std::size_t start = pos_;
    pos_ += 2;
    std::uint32_t cp = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      if (!is_hex(peek()) || eof()) fail(kind, start, pos_, "bad unicode escape");
      cp = cp * 16 + static_cast<std::uint32_t>(std::stoi(std::string(1, text_[pos_++]), nullptr, 16));
    }
    if (cp > 0x10FFFF) fail(kind, start, pos_, "code point out of range");
    std::string out;
    append_utf8(out, cp);
    return out;
  }

  std::string blank_label() {
    pos_ += 2;  // "_:"
    if (!(is_name_start(peek()) || is_digit(peek())) || eof()) unexpected("blank node label");
    std::string label;
    while (!eof() && (is_name_char(peek()) || (peek() == '.' && is_name_char(peek(1)))))
      label += text_[pos_++];
    return label;
  }

  std::string prefixed_name() {
    std::size_t start = pos_;
    std::string prefix;
    if (peek() != ':') {
      while (!eof() && (is_name_char(peek()) || (peek() == '.' && is_name_char(peek(1)))))
        prefix += text_[pos_++];
    }
    if (peek() != ':') {
      pos_ = start;
      unexpected("prefixed name");
    }
    ++pos_;
    std::string local;
    for (;;) {
      if (eof()) break;
      char c = text_[pos_];
      if (is_name_char(c) || c == ':') {
        local += c;
        ++pos_;
      } else if (c == '.' && (is_name_char(peek(1)) || peek(1) == ':' || peek(1) == '%')) {
        local += c;
        ++pos_;
      } else if (c == '%') {
        if (!is_hex(peek(1)) || !is_hex(peek(2)))
          fail(ParseError::Kind::BadIri, pos_, pos_ + 1, "bad percent escape in local name");
        local.append(text_.substr(pos_, 3));
        pos_ += 3;
      } else if (c == '\\' && peek(1) != '\0' && std::string_view("_~.-!$&'()*+,;=/?#@%").find(peek(1)) != std::string_view::npos) {
        local += peek(1);
        pos_ += 2;
      } else {
        break;
      }
    }
    auto found = doc_.prefixes.find(prefix);
    if (found == doc_.prefixes.end())
      fail(ParseError::Kind::UnknownPrefix, start, pos_, "prefix '" + prefix + ":' is not bound");
    return found->second + local;
  }

  Term string_literal() {
    std::size_t start = pos_;
    char quote = peek();
    bool long_form = peek(1) == quote && peek(2) == quote;
    pos_ += long_form ? 3 : 1;
    std::string lexical;
    for (;;) {
      if (eof()) fail(ParseError::Kind::BadLiteral, start, pos_, "unterminated string");
      char c = text_[pos_];
      if (long_form ? (c == quote && peek(1) == quote && peek(2) == quote) : c == quote) {
        pos_ += long_form ? 3 : 1;
        break;
      }
      if (!long_form && (c == '\n' || c == '\r'))
        fail(ParseError::Kind::BadLiteral, start, pos_, "newline in short string");
      if (c == '\\') {
        char e = peek(1);
        switch (e) {
          case 't': lexical += '\t'; break;
          case 'b': lexical += '\b'; break;
          case 'n': lexical += '\n'; break;
          case 'r': lexical += '\r'; break;
          case 'f': lexical += '\f'; break;
          case '"': lexical += '"'; break;
          case '\'': lexical += '\''; break;
          case '\\': lexical += '\\'; break;
          case 'u':
          case 'U':
            lexical += unicode_escape(e == 'u' ? 4 : 8, ParseError::Kind::BadLiteral);
            continue;
          default:
            fail(ParseError::Kind::BadLiteral, pos_, pos_ + 2, "unknown string escape");
        }
        pos_ += 2;
        continue;
      }
      lexical += c;
      ++pos_;
    }
    if (peek() == '@' && is_alpha(peek(1))) {
      ++pos_;
      std::string lang;
      while (is_alpha(peek())) lang += text_[pos_++];
      while (peek() == '-' && (is_alpha(peek(1)) || is_digit(peek(1)))) {
        lang += text_[pos_++];
        while (is_alpha(peek()) || is_digit(peek())) lang += text_[pos_++];
      }
      return make_lang_literal(std::move(lexical), std::move(lang));
    }
    if (looking_at("^^")) {
      pos_ += 2;
      if (peek() == '<') return make_literal(std::move(lexical), iri_ref());
      if (is_name_start(peek()) || peek() == ':') return make_literal(std::move(lexical), prefixed_name());
      fail(ParseError::Kind::BadLiteral, start, pos_, "expected datatype IRI after '^^'");
    }
    return make_literal(std::move(lexical));
  }

  Term numeric_literal() {
    std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    while (is_digit(peek())) ++pos_;
    bool decimal = false;
    if (peek() == '.' && is_digit(peek(1))) {
      decimal = true;
      ++pos_;
      while (is_digit(peek())) ++pos_;
    }
    bool exponent = false;
    if (peek() == 'e' || peek() == 'E') {
      std::size_t mark = pos_;
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (!is_digit(peek())) fail(ParseError::Kind::BadLiteral, start, pos_, "malformed exponent");
      while (is_digit(peek())) ++pos_;
      exponent = mark != pos_;
    }
    if (is_name_start(peek()))
      fail(ParseError::Kind::BadLiteral, start, pos_ + 1, "malformed number");
    std::string lexical(text_.substr(start, pos_ - start));
    std::string type = exponent ? "double" : decimal ? "decimal" : "integer";
    return make_literal(std::move(lexical), std::string(kXsdNs) + type);
  }

  std::string_view text_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
  std::vector<std::size_t> line_starts_;
  std::vector<std::vector<std::string>> scopes_;
  Document doc_;
};

}  // namespace

ParseError::ParseError(Kind kind, SourceSpan span, const std::string& message)
    : std::runtime_error(describe(kind, span, message)), kind_(kind), span_(span), detail_(message) {}

const char* to_string(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::UnexpectedToken: return "UnexpectedToken";
    case ParseError::Kind::UnknownPrefix: return "UnknownPrefix";
    case ParseError::Kind::BadIri: return "BadIri";
    case ParseError::Kind::BadLiteral: return "BadLiteral";
    case ParseError::Kind::UnclosedGraph: return "UnclosedGraph";
    case ParseError::Kind::NonListSubjectForSurface: return "NonListSubjectForSurface";
    case ParseError::Kind::DuplicateGraffitiDeclaration: return "DuplicateGraffitiDeclaration";
    case ParseError::Kind::NestingTooDeep: return "NestingTooDeep";
  }
  return "?";
}

Document parse(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).run();
}

std::string expand(std::string_view prefixed_name, const PrefixMap& prefixes) {
  auto colon = prefixed_name.find(':');
  SourceSpan whole{0, prefixed_name.size(), 1, 1};
  if (colon == std::string_view::npos)
    throw ParseError(ParseError::Kind::UnexpectedToken, whole, "not a prefixed name");
  std::string prefix(prefixed_name.substr(0, colon));
  auto found = prefixes.find(prefix);
  if (found == prefixes.end())
    throw ParseError(ParseError::Kind::UnknownPrefix, whole, "prefix '" + prefix + ":' is not bound");
  return found->second + std::string(prefixed_name.substr(colon + 1));
}

}  // namespace surfaces
