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

#include "surfaces/tptp.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <set>
#include <vector>

namespace surfaces {

namespace {

bool is_lower_word(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

class Emitter {
 public:
  explicit Emitter(const Formula& f) { name_vars(f); }

  std::string formula(const Formula& f) {
    switch (f.kind) {
      case Formula::Kind::True: return "$true";
      case Formula::Kind::False: return "$false";
      case Formula::Kind::Atom: return atom(f.atom);
      case Formula::Kind::Not: {
        const Formula& b = f.body();
        bool wrap = b.kind == Formula::Kind::Exists || b.kind == Formula::Kind::Forall;
        return "~ " + (wrap ? "( " + formula(b) + " )" : formula(b));
      }
      case Formula::Kind::And:
      case Formula::Kind::Or: {
        if (f.children.empty()) return f.kind == Formula::Kind::And ? "$true" : "$false";
        if (f.children.size() == 1) return formula(f.children.front());
        const char* op = f.kind == Formula::Kind::And ? " & " : " | ";
        std::string out = "( ";
        for (std::size_t i = 0; i < f.children.size(); ++i) {
          if (i) out += op;
          out += formula(f.children[i]);
        }
        return out + " )";
      }
      case Formula::Kind::Exists:
      case Formula::Kind::Forall: {
        const Formula* cur = &f;
        std::vector<std::string> vars;
        while (cur->kind == f.kind) {
          vars.push_back(var_name(cur->var));
          cur = &cur->body();
        }
        std::string out = f.kind == Formula::Kind::Exists ? "? [" : "! [";
        for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? "," : "") + vars[i];
        return out + "] : " + formula(*cur);
      }
    }
    return "$true";
  }

 private:
  void name_vars(const Formula& f) {
    if (f.kind == Formula::Kind::Exists || f.kind == Formula::Kind::Forall) {
      if (!names_.contains(f.var)) {
        std::string base;
        for (char c : f.hint)
          if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') base += c;
        if (base.empty() || !std::isalpha(static_cast<unsigned char>(base[0])))
          base = "X" + std::to_string(f.var);
        base[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(base[0])));
        std::string name = base;
        if (taken_.contains(name)) name = base + "_" + std::to_string(f.var);
        taken_.insert(name);
        names_.emplace(f.var, name);
      }
    }
    for (const auto& c : f.children) name_vars(c);
  }

  std::string var_name(VarId v) {
    auto it = names_.find(v);
    if (it != names_.end()) return it->second;
    std::string name = "X" + std::to_string(v);
    while (taken_.contains(name)) name += "_";
    taken_.insert(name);
    names_.emplace(v, name);
    return name;
  }

  std::string term(const FoTerm& t) {
    switch (t.kind) {
      case FoTerm::Kind::Var: return var_name(t.id);
      case FoTerm::Kind::Fn: {
        std::string out = "sk" + std::to_string(t.id);
        if (t.args.empty()) return out;
        out += "(";
        for (std::size_t i = 0; i < t.args.size(); ++i) out += (i ? "," : "") + term(t.args[i]);
        return out + ")";
      }
      case FoTerm::Kind::Const: {
        if (const auto* iri = std::get_if<Iri>(&t.constant)) return tptp_quote(iri->value);
        if (const auto* lit = std::get_if<Literal>(&t.constant)) {
          std::string text = "\"" + lit->lexical + "\"";
          text += lit->language ? "@" + *lit->language : "^^<" + lit->datatype + ">";
          return tptp_quote(text);
        }
        return tptp_quote(term_to_string(t.constant));
      }
    }
    return "'?'";
  }

  std::string atom(const Atom& a) {
    return "triple(" + term(a.subject) + "," + term(a.predicate) + "," + term(a.object) + ")";
  }

  std::map<VarId, std::string> names_;
  std::set<std::string> taken_;
};

// -- grammar check ------------------------------------------------------------

struct Token {
  enum class Type { LowerWord, UpperWord, DollarWord, Quoted, Distinct, Number, Punct, End };
  Type type;
  std::string text;
  std::size_t offset;
};

class FofChecker {
 public:
  explicit FofChecker(std::string_view text) : text_(text) {}

  std::optional<std::string> run() {
    try {
      tokenize();
      statement();
      if (peek().type != Token::Type::End) fail("trailing input");
      return std::nullopt;
    } catch (const std::string& message) {
      return message;
    }
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    std::size_t at = pos_ < tokens_.size() ? tokens_[pos_].offset : text_.size();
    throw "offset " + std::to_string(at) + ": " + message;
  }

  void tokenize() {
    std::size_t i = 0;
    auto word = [&](std::size_t start) {
      while (i < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i])) || text_[i] == '_')) ++i;
      return std::string(text_.substr(start, i - start));
    };
    while (i < text_.size()) {
      char c = text_[i];
      std::size_t start = i;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '%') {
        while (i < text_.size() && text_[i] != '\n') ++i;
      } else if (std::islower(static_cast<unsigned char>(c))) {
        tokens_.push_back({Token::Type::LowerWord, word(start), start});
      } else if (std::isupper(static_cast<unsigned char>(c))) {
        tokens_.push_back({Token::Type::UpperWord, word(start), start});
      } else if (c == '$') {
        ++i;
        tokens_.push_back({Token::Type::DollarWord, "$" + word(i), start});
        if (tokens_.back().text.size() == 1) throw "offset " + std::to_string(start) + ": bad $word";
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
        tokens_.push_back({Token::Type::Number, std::string(text_.substr(start, i - start)), start});
      } else if (c == '\'' || c == '"') {
        ++i;
        std::string body;
        for (;;) {
          if (i >= text_.size()) throw "offset " + std::to_string(start) + ": unterminated quote";
          char d = text_[i];
          if (d == c) {
            ++i;
            break;
          }
          if (d == '\\') {
            if (i + 1 >= text_.size() || (text_[i + 1] != '\\' && text_[i + 1] != c))
              throw "offset " + std::to_string(i) + ": bad escape in quoted token";
            body += text_[i + 1];
            i += 2;
            continue;
          }
          if (static_cast<unsigned char>(d) < 32 || static_cast<unsigned char>(d) > 126)
            throw "offset " + std::to_string(i) + ": non-printable character in quoted token";
          body += d;
          ++i;
        }
        if (body.empty()) throw "offset " + std::to_string(start) + ": empty quoted token";
        tokens_.push_back({c == '\'' ? Token::Type::Quoted : Token::Type::Distinct, body, start});
      } else {
        static const char* ops[] = {"<=>", "<~>", "=>", "<=", "~|", "~&", "!=", "(", ")", "[", "]",
                                    ",", ".", ":", "~", "&", "|", "!", "?", "="};
        bool matched = false;
        for (const char* op : ops) {
          std::string_view v(op);
          if (text_.substr(i, v.size()) == v) {
            tokens_.push_back({Token::Type::Punct, std::string(v), start});
            i += v.size();
            matched = true;
            break;
          }
        }
        if (!matched) throw "offset " + std::to_string(start) + ": unexpected character";
      }
    }
    tokens_.push_back({Token::Type::End, "", text_.size()});
  }

  const Token& peek() const { return tokens_[pos_]; }
  bool at(std::string_view punct) const {
    return peek().type == Token::Type::Punct && peek().text == punct;
  }
  void expect(std::string_view punct) {
    if (!at(punct)) fail("expected '" + std::string(punct) + "'");
    ++pos_;
  }

  void statement() {
    if (peek().type != Token::Type::LowerWord || peek().text != "fof") fail("expected 'fof'");
    ++pos_;
    expect("(");
    auto t = peek().type;
    if (t != Token::Type::LowerWord && t != Token::Type::Quoted && t != Token::Type::Number)
      fail("bad statement name");
    ++pos_;
    expect(",");
    static const std::set<std::string> roles = {
        "axiom",  "hypothesis", "definition", "assumption", "lemma",      "theorem",
        "corollary", "conjecture", "negated_conjecture", "plain", "type", "unknown"};
    if (peek().type != Token::Type::LowerWord || !roles.contains(peek().text)) fail("bad role");
    ++pos_;
    expect(",");
    formula();
    expect(")");
    expect(".");
  }

  void formula() {
    unit();
    if (at("&") || at("|")) {
      std::string op = peek().text;
      while (at(op)) {
        ++pos_;
        unit();
      }
      if (at("&") || at("|") || binary_op()) fail("mixed connectives need parentheses");
      return;
    }
    if (binary_op()) {
      ++pos_;
      unit();
      if (at("&") || at("|") || binary_op()) fail("non-associative connective needs parentheses");
    }
  }

  bool binary_op() const {
    return at("<=>") || at("=>") || at("<=") || at("<~>") || at("~|") || at("~&");
  }

  void unit() {
    if (at("~")) {
      ++pos_;
      unit();
      return;
    }
    if (at("!") || at("?")) {
      ++pos_;
      expect("[");
      std::vector<std::string> vars;
      for (;;) {
        if (peek().type != Token::Type::UpperWord) fail("expected variable");
        vars.push_back(peek().text);
        ++pos_;
        if (at(",")) {
          ++pos_;
          continue;
        }
        break;
      }
      expect("]");
      expect(":");
      for (const auto& v : vars) bound_.push_back(v);
      unit();
      bound_.resize(bound_.size() - vars.size());
      return;
    }
    if (at("(")) {
      ++pos_;
      formula();
      expect(")");
      return;
    }
    atomic();
  }

  void atomic() {
    const Token& t = peek();
    if (t.type == Token::Type::DollarWord && (t.text == "$true" || t.text == "$false")) {
      ++pos_;
      return;
    }
    if (t.type == Token::Type::UpperWord) fail("variable used as a formula");
    term();
    if (at("=") || at("!=")) {
      ++pos_;
      term();
    }
  }

  void term() {
    const Token& t = peek();
    switch (t.type) {
      case Token::Type::UpperWord:
        if (std::find(bound_.begin(), bound_.end(), t.text) == bound_.end())
          fail("free variable " + t.text);
        ++pos_;
        return;
      case Token::Type::Distinct:
      case Token::Type::Number: ++pos_; return;
      case Token::Type::LowerWord:
      case Token::Type::Quoted:
      case Token::Type::DollarWord:
        ++pos_;
        if (at("(")) {
          ++pos_;
          term();
          while (at(",")) {
            ++pos_;
            term();
          }
          expect(")");
        }
        return;
      default: fail("expected term");
    }
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::string> bound_;
};

}  // namespace

std::string tptp_quote(std::string_view text) {
  std::string out = "'";
  for (char c : text) {
    auto u = static_cast<unsigned char>(c);
    if (c == '\'' || c == '\\' || c == '%' || u < 32 || u > 126) {
      char buf[4];
      std::snprintf(buf, sizeof buf, "%%%02X", u);
      out += buf;
    } else {
      out += c;
    }
  }
  return out + "'";
}

std::string to_tptp(const Formula& f, std::string_view name, std::string_view role) {
  std::string label = is_lower_word(name) ? std::string(name) : tptp_quote(name);
  return "fof(" + label + ", " + std::string(role) + ", " + Emitter(f).formula(f) + ").";
}

std::optional<std::string> check_tptp_fof(std::string_view text) { return FofChecker(text).run(); }

}  // namespace surfaces
