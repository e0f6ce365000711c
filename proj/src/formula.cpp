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

#include "surfaces/formula.hpp"

#include <algorithm>

namespace surfaces {

FoTerm FoTerm::make_const(Term t) {
  FoTerm out;
  out.kind = Kind::Const;
  out.constant = std::move(t);
  return out;
}

FoTerm FoTerm::make_var(VarId v) {
  FoTerm out;
  out.kind = Kind::Var;
  out.id = v;
  return out;
}

FoTerm FoTerm::make_fn(SymbolId f, std::vector<FoTerm> args) {
  FoTerm out;
  out.kind = Kind::Fn;
  out.id = f;
  out.args = std::move(args);
  return out;
}

bool FoTerm::operator==(const FoTerm& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case Kind::Const: return constant == other.constant;
    case Kind::Var: return id == other.id;
    case Kind::Fn: return id == other.id && args == other.args;
  }
  return false;
}

std::strong_ordering FoTerm::operator<=>(const FoTerm& other) const {
  if (auto c = kind <=> other.kind; c != 0) return c;
  switch (kind) {
    case Kind::Const: {
      auto c = constant <=> other.constant;
      return c < 0 ? std::strong_ordering::less
                   : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    case Kind::Var: return id <=> other.id;
    case Kind::Fn:
      if (auto c = id <=> other.id; c != 0) return c;
      return std::lexicographical_compare_three_way(args.begin(), args.end(), other.args.begin(),
                                                    other.args.end());
  }
  return std::strong_ordering::equal;
}

std::strong_ordering Atom::operator<=>(const Atom& other) const {
  if (auto c = predicate <=> other.predicate; c != 0) return c;
  if (auto c = subject <=> other.subject; c != 0) return c;
  return object <=> other.object;
}

std::strong_ordering SignedAtom::operator<=>(const SignedAtom& other) const {
  if (auto c = atom <=> other.atom; c != 0) return c;
  return positive <=> other.positive;
}

Formula Formula::make_atom(surfaces::Atom a) {
  Formula f;
  f.kind = Kind::Atom;
  f.atom = std::move(a);
  return f;
}

Formula Formula::make_true() { return Formula{}; }

Formula Formula::make_false() {
  Formula f;
  f.kind = Kind::False;
  return f;
}

Formula Formula::make_not(Formula body) {
  Formula f;
  f.kind = Kind::Not;
  f.children.push_back(std::move(body));
  return f;
}

Formula Formula::make_and(std::vector<Formula> fs) {
  Formula f;
  f.kind = Kind::And;
  f.children = std::move(fs);
  return f;
}

Formula Formula::make_or(std::vector<Formula> fs) {
  Formula f;
  f.kind = Kind::Or;
  f.children = std::move(fs);
  return f;
}

Formula Formula::make_exists(VarId v, Formula body, std::string hint) {
  Formula f;
  f.kind = Kind::Exists;
  f.var = v;
  f.hint = std::move(hint);
  f.children.push_back(std::move(body));
  return f;
}

Formula Formula::make_forall(VarId v, Formula body, std::string hint) {
  Formula f = make_exists(v, std::move(body), std::move(hint));
  f.kind = Kind::Forall;
  return f;
}

bool Formula::operator==(const Formula& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case Kind::Atom: return atom == other.atom;
    case Kind::Exists:
    case Kind::Forall: return var == other.var && children == other.children;
    default: return children == other.children;
  }
}

Clause::Clause(std::vector<SignedAtom> literals) : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end());
  literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
}

bool Clause::is_tautology() const {
  // Sorted by atom first, so complementary pairs are adjacent.
  for (std::size_t i = 1; i < literals_.size(); ++i)
    if (literals_[i].atom == literals_[i - 1].atom) return true;
  return false;
}

void collect_vars(const FoTerm& t, std::set<VarId>& out) {
  if (t.is_var()) out.insert(t.id);
  for (const auto& a : t.args) collect_vars(a, out);
}

void collect_vars(const Atom& a, std::set<VarId>& out) {
  collect_vars(a.subject, out);
  collect_vars(a.predicate, out);
  collect_vars(a.object, out);
}

std::set<VarId> free_vars(const Formula& f) {
  std::set<VarId> out;
  switch (f.kind) {
    case Formula::Kind::Atom: collect_vars(f.atom, out); break;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      out = free_vars(f.body());
      out.erase(f.var);
      break;
    default:
      for (const auto& c : f.children) out.merge(free_vars(c));
  }
  return out;
}

std::set<VarId> clause_vars(const Clause& c) {
  std::set<VarId> out;
  for (const auto& l : c.literals()) collect_vars(l.atom, out);
  return out;
}

std::size_t term_depth(const FoTerm& t) {
  std::size_t d = 0;
  for (const auto& a : t.args) d = std::max(d, term_depth(a));
  return t.is_fn() ? d + 1 : 0;
}

std::size_t max_term_depth(const Clause& c) {
  std::size_t d = 0;
  for (const auto& l : c.literals())
    d = std::max({d, term_depth(l.atom.subject), term_depth(l.atom.predicate), term_depth(l.atom.object)});
  return d;
}

namespace {
std::size_t symbols(const FoTerm& t) {
  std::size_t n = 1;
  for (const auto& a : t.args) n += symbols(a);
  return n;
}
}  // namespace

std::size_t symbol_count(const Clause& c) {
  std::size_t n = 0;
  for (const auto& l : c.literals())
    n += 1 + symbols(l.atom.subject) + symbols(l.atom.predicate) + symbols(l.atom.object);
  return n;
}

bool is_ground(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Atom: {
      std::set<VarId> vs;
      collect_vars(f.atom, vs);
      auto has_fn = [](const FoTerm& t) { return t.is_fn(); };
      return vs.empty() && !has_fn(f.atom.subject) && !has_fn(f.atom.predicate) && !has_fn(f.atom.object);
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: return false;
    default:
      return std::all_of(f.children.begin(), f.children.end(), [](const Formula& c) { return is_ground(c); });
  }
}

std::string to_string(const FoTerm& t) {
  switch (t.kind) {
    case FoTerm::Kind::Const: return term_to_string(t.constant);
    case FoTerm::Kind::Var: return "X" + std::to_string(t.id);
    case FoTerm::Kind::Fn: {
      std::string out = "sk" + std::to_string(t.id);
      if (t.args.empty()) return out;
      out += "(";
      for (std::size_t i = 0; i < t.args.size(); ++i) out += (i ? "," : "") + to_string(t.args[i]);
      return out + ")";
    }
  }
  return "?";
}

std::string to_string(const Atom& a) {
  return "triple(" + to_string(a.subject) + "," + to_string(a.predicate) + "," + to_string(a.object) + ")";
}

std::string to_string(const SignedAtom& l) { return (l.positive ? "" : "~") + to_string(l.atom); }

std::string to_string(const Clause& c) {
  if (c.empty()) return "$false";
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " | " : "") + to_string(c.literals()[i]);
  return out;
}

std::string to_string(const Formula& f) {
  auto join = [&](const char* op) {
    std::string out = "(";
    for (std::size_t i = 0; i < f.children.size(); ++i)
      out += (i ? std::string(" ") + op + " " : "") + to_string(f.children[i]);
    return out + ")";
  };
  switch (f.kind) {
    case Formula::Kind::Atom: return to_string(f.atom);
    case Formula::Kind::True: return "$true";
    case Formula::Kind::False: return "$false";
    case Formula::Kind::Not: return "~" + to_string(f.body());
    case Formula::Kind::And: return f.children.empty() ? "$true" : join("&");
    case Formula::Kind::Or: return f.children.empty() ? "$false" : join("|");
    case Formula::Kind::Exists: return "?[X" + std::to_string(f.var) + "]: " + to_string(f.body());
    case Formula::Kind::Forall: return "![X" + std::to_string(f.var) + "]: " + to_string(f.body());
  }
  return "?";
}

Formula clauses_to_formula(const ClauseSet& clauses) {
  std::vector<Formula> conj;
  for (const auto& c : clauses) {
    std::vector<Formula> disj;
    for (const auto& l : c.literals()) {
      Formula a = Formula::make_atom(l.atom);
      disj.push_back(l.positive ? std::move(a) : Formula::make_not(std::move(a)));
    }
    Formula body = Formula::make_or(std::move(disj));
    auto vars = clause_vars(c);
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      body = Formula::make_forall(*it, std::move(body));
    conj.push_back(std::move(body));
  }
  return Formula::make_and(std::move(conj));
}

}  // namespace surfaces
