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

#include "surfaces/display.hpp"

#include <map>
#include <set>

namespace surfaces {

namespace {

enum Level { kQuant = 0, kOr = 1, kAnd = 2, kUnary = 3 };

class Renderer {
 public:
  explicit Renderer(const Formula& f) { name_vars(f); }

  std::string render(const Formula& f, int context) {
    auto [text, level] = render_raw(f);
    return level < context ? "(" + text + ")" : text;
  }

 private:
  std::pair<std::string, int> render_raw(const Formula& f) {
    switch (f.kind) {
      case Formula::Kind::True: return {"true", kUnary};
      case Formula::Kind::False: return {"false", kUnary};
      case Formula::Kind::Atom: return {atom(f.atom), kUnary};
      case Formula::Kind::Not: return negation(f);
      case Formula::Kind::And:
      case Formula::Kind::Or: {
        if (f.children.empty()) return {f.kind == Formula::Kind::And ? "true" : "false", kUnary};
        int level = f.kind == Formula::Kind::And ? kAnd : kOr;
        const char* op = f.kind == Formula::Kind::And ? " ∧ " : " ∨ ";
        std::string out;
        for (std::size_t i = 0; i < f.children.size(); ++i)
          out += (i ? op : "") + render(f.children[i], level + 1);
        return {out, level};
      }
      case Formula::Kind::Exists:
      case Formula::Kind::Forall: {
        const Formula* cur = &f;
        std::string vars;
        while (cur->kind == f.kind) {
          vars += (vars.empty() ? "" : ", ") + name(cur->var);
          cur = &cur->body();
        }
        return {(f.kind == Formula::Kind::Exists ? "∃" : "∀") + vars + ": " + render(*cur, kQuant), kQuant};
      }
    }
    return {"?", kUnary};
  }

  std::pair<std::string, int> negation(const Formula& f) {
    const Formula* cur = &f.body();
    std::string vars;
    while (cur->kind == Formula::Kind::Exists) {
      vars += (vars.empty() ? "" : ", ") + name(cur->var);
      cur = &cur->body();
    }
    std::vector<const Formula*> parts;
    if (cur->kind == Formula::Kind::And)
      for (const auto& c : cur->children) parts.push_back(&c);
    else
      parts.push_back(cur);

    std::vector<const Formula*> antecedent, consequent;
    for (const auto* p : parts)
      (p->kind == Formula::Kind::Not ? consequent : antecedent).push_back(p);

    std::string prefix = vars.empty() ? "" : "∀" + vars + ": ";
    if (consequent.empty()) {
      if (vars.empty()) return {"¬" + render(f.body(), kUnary), kUnary};
      return {prefix + "¬" + render(*cur, kUnary), kQuant};
    }
    std::string then;
    for (std::size_t i = 0; i < consequent.size(); ++i)
      then += (i ? " ∨ " : "") + render(consequent[i]->body(), kOr + 1);
    if (antecedent.empty()) return {prefix + then, vars.empty() && consequent.size() > 1 ? kOr : kQuant};
    std::string when;
    for (std::size_t i = 0; i < antecedent.size(); ++i)
      when += (i ? " ∧ " : "") + render(*antecedent[i], kAnd + 1);
    return {prefix + when + " ⇒ " + then, kQuant};
  }

  std::string term(const FoTerm& t) {
    switch (t.kind) {
      case FoTerm::Kind::Var: return name(t.id);
      case FoTerm::Kind::Fn: {
        std::string out = "sk" + std::to_string(t.id);
        if (t.args.empty()) return out;
        out += "(";
        for (std::size_t i = 0; i < t.args.size(); ++i) out += (i ? ", " : "") + term(t.args[i]);
        return out + ")";
      }
      case FoTerm::Kind::Const:
        if (const auto* iri = std::get_if<Iri>(&t.constant)) return local_name(iri->value);
        if (const auto* lit = std::get_if<Literal>(&t.constant)) return "\"" + lit->lexical + "\"";
        return term_to_string(t.constant);
    }
    return "?";
  }

  std::string atom(const Atom& a) {
    if (a.predicate.is_const())
      if (const auto* iri = std::get_if<Iri>(&a.predicate.constant))
        return local_name(iri->value) + "(" + term(a.subject) + ", " + term(a.object) + ")";
    return "triple(" + term(a.subject) + ", " + term(a.predicate) + ", " + term(a.object) + ")";
  }

  void name_vars(const Formula& f) {
    if ((f.kind == Formula::Kind::Exists || f.kind == Formula::Kind::Forall) && !names_.contains(f.var)) {
      std::string n = f.hint.empty() ? "x" + std::to_string(f.var) : f.hint;
      if (taken_.contains(n)) n += std::to_string(f.var);
      taken_.insert(n);
      names_.emplace(f.var, n);
    }
    for (const auto& c : f.children) name_vars(c);
  }

  std::string name(VarId v) {
    auto it = names_.find(v);
    return it == names_.end() ? "x" + std::to_string(v) : it->second;
  }

  std::map<VarId, std::string> names_;
  std::set<std::string> taken_;
};

}  // namespace

std::string local_name(const std::string& iri) {
  auto cut = iri.find_last_of("#/:");
  if (cut == std::string::npos || cut + 1 == iri.size()) return iri;
  return iri.substr(cut + 1);
}

std::string render_display(const Formula& f) { return Renderer(f).render(f, kQuant); }

std::vector<std::string> render_display_lines(const Formula& f) {
  if (f.kind != Formula::Kind::And || f.children.empty()) return {render_display(f)};
  Renderer r(f);
  std::vector<std::string> lines;
  for (const auto& c : f.children) lines.push_back(r.render(c, kQuant));
  return lines;
}

}  // namespace surfaces
