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

#include "surfaces/translate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace surfaces {

namespace {

using Kind = Formula::Kind;

Formula conjunction(std::vector<Formula> parts) {
  if (parts.empty()) return Formula::make_true();
  if (parts.size() == 1) return std::move(parts.front());
  return Formula::make_and(std::move(parts));
}

std::string hint_of(const Graffiti& g) { return g.hint.value_or(""); }

}  // namespace

FoTerm to_fo_term(const Term& t) {
  if (const auto* g = std::get_if<Graffiti>(&t)) return FoTerm::make_var(g->id);
  if (std::holds_alternative<BlankNode>(t))
    throw std::invalid_argument("translate expects a closed document (found blank node)");
  return FoTerm::make_const(t);
}

Formula translate(const HGraph& surface) {
  std::vector<Formula> parts;
  parts.reserve(surface.contents.size());
  for (const auto& e : surface.contents) {
    if (const auto* t = std::get_if<Triple>(&e))
      parts.push_back(Formula::make_atom({to_fo_term(t->subject), to_fo_term(t->predicate),
                                          to_fo_term(t->object)}));
    else
      parts.push_back(translate(*std::get<Box<HGraph>>(e)));
  }
  Formula body = conjunction(std::move(parts));
  // An empty surface is a tautology whatever its graffiti.
  if (body.kind != Kind::True)
    for (auto it = surface.graffiti.rbegin(); it != surface.graffiti.rend(); ++it)
      body = Formula::make_exists(it->id, std::move(body), hint_of(*it));
  if (surface.kind == SurfaceKind::Positive) return body;
  if (body.kind == Kind::True) return Formula::make_false();
  return Formula::make_not(std::move(body));
}

Formula translate(const Document& doc) { return translate(doc.root); }

// -- NNF --------------------------------------------------------------------

namespace {

Formula simplify_junction(Kind kind, std::vector<Formula> parts) {
  const Kind unit = kind == Kind::And ? Kind::True : Kind::False;
  const Kind zero = kind == Kind::And ? Kind::False : Kind::True;
  std::vector<Formula> kept;
  for (auto& p : parts) {
    if (p.kind == zero) return p;
    if (p.kind == unit) continue;
    if (p.kind == kind) {
      for (auto& c : p.children) kept.push_back(std::move(c));
      continue;
    }
    kept.push_back(std::move(p));
  }
  if (kept.empty()) return unit == Kind::True ? Formula::make_true() : Formula::make_false();
  if (kept.size() == 1) return std::move(kept.front());
  return kind == Kind::And ? Formula::make_and(std::move(kept)) : Formula::make_or(std::move(kept));
}

Formula nnf_signed(const Formula& f, bool negated) {
  switch (f.kind) {
    case Kind::True: return negated ? Formula::make_false() : Formula::make_true();
    case Kind::False: return negated ? Formula::make_true() : Formula::make_false();
    case Kind::Atom: return negated ? Formula::make_not(f) : f;
    case Kind::Not: return nnf_signed(f.body(), !negated);
    case Kind::And:
    case Kind::Or: {
      std::vector<Formula> parts;
      for (const auto& c : f.children) parts.push_back(nnf_signed(c, negated));
      Kind k = (f.kind == Kind::And) != negated ? Kind::And : Kind::Or;
      return simplify_junction(k, std::move(parts));
    }
    case Kind::Exists:
    case Kind::Forall: {
      Formula body = nnf_signed(f.body(), negated);
      if (body.kind == Kind::True || body.kind == Kind::False) return body;
      bool universal = (f.kind == Kind::Forall) != negated;
      return universal ? Formula::make_forall(f.var, std::move(body), f.hint)
                       : Formula::make_exists(f.var, std::move(body), f.hint);
    }
  }
  return f;
}

}  // namespace

Formula nnf(const Formula& f) { return nnf_signed(f, false); }

// -- standardize apart ------------------------------------------------------

namespace {

VarId max_var(const FoTerm& t) {
  VarId m = t.is_var() ? t.id : 0;
  for (const auto& a : t.args) m = std::max(m, max_var(a));
  return m;
}

VarId max_id(const Formula& f) {
  VarId m = 0;
  if (f.kind == Kind::Atom)
    m = std::max({max_var(f.atom.subject), max_var(f.atom.predicate), max_var(f.atom.object)});
  if (f.kind == Kind::Exists || f.kind == Kind::Forall) m = f.var;
  for (const auto& c : f.children) m = std::max(m, max_id(c));
  return m;
}

SymbolId max_symbol(const FoTerm& t) {
  SymbolId m = t.is_fn() ? t.id : 0;
  for (const auto& a : t.args) m = std::max(m, max_symbol(a));
  return m;
}

SymbolId max_symbol(const Formula& f) {
  SymbolId m = 0;
  if (f.kind == Kind::Atom)
    m = std::max({max_symbol(f.atom.subject), max_symbol(f.atom.predicate), max_symbol(f.atom.object)});
  for (const auto& c : f.children) m = std::max(m, max_symbol(c));
  return m;
}

FoTerm replace_vars(const FoTerm& t, const std::map<VarId, FoTerm>& sub) {
  if (t.is_var()) {
    auto it = sub.find(t.id);
    return it == sub.end() ? t : it->second;
  }
  if (!t.is_fn()) return t;
  std::vector<FoTerm> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(replace_vars(a, sub));
  return FoTerm::make_fn(t.id, std::move(args));
}

class Renamer {
 public:
  explicit Renamer(const Formula& f) : next_(max_id(f) + 1), used_(free_vars(f)) {}

  Formula run(const Formula& f, std::map<VarId, FoTerm>& sub) {
    switch (f.kind) {
      case Kind::Atom:
        return Formula::make_atom({replace_vars(f.atom.subject, sub), replace_vars(f.atom.predicate, sub),
                                   replace_vars(f.atom.object, sub)});
      case Kind::Exists:
      case Kind::Forall: {
        VarId v = f.var;
        auto saved = sub.find(v) == sub.end() ? std::nullopt : std::optional<FoTerm>(sub.at(v));
        if (!used_.insert(v).second) {
          VarId fresh = next_++;
          used_.insert(fresh);
          sub[f.var] = FoTerm::make_var(fresh);
          v = fresh;
        } else {
          sub.erase(f.var);
        }
        Formula body = run(f.body(), sub);
        if (saved)
          sub[f.var] = *saved;
        else
          sub.erase(f.var);
        return f.kind == Kind::Exists ? Formula::make_exists(v, std::move(body), f.hint)
                                      : Formula::make_forall(v, std::move(body), f.hint);
      }
      default: {
        Formula out = f;
        for (auto& c : out.children) c = run(c, sub);
        return out;
      }
    }
  }

 private:
  VarId next_;
  std::set<VarId> used_;
};

}  // namespace

Formula standardize_apart(const Formula& f) {
  std::map<VarId, FoTerm> sub;
  return Renamer(f).run(f, sub);
}

// -- Skolemization ----------------------------------------------------------

namespace {

class Skolemizer {
 public:
  explicit Skolemizer(const Formula& f) : next_(std::max(max_id(f), max_symbol(f)) + 1) {}

  Formula run(const Formula& f, std::vector<VarId>& universals, std::map<VarId, FoTerm>& sub) {
    switch (f.kind) {
      case Kind::Atom:
        return Formula::make_atom({replace_vars(f.atom.subject, sub), replace_vars(f.atom.predicate, sub),
                                   replace_vars(f.atom.object, sub)});
      case Kind::Forall: {
        universals.push_back(f.var);
        Formula body = run(f.body(), universals, sub);
        universals.pop_back();
        return Formula::make_forall(f.var, std::move(body), f.hint);
      }
      case Kind::Exists: {
        std::vector<FoTerm> args;
        for (VarId u : universals) args.push_back(FoTerm::make_var(u));
        sub[f.var] = FoTerm::make_fn(next_++, std::move(args));
        Formula body = run(f.body(), universals, sub);
        sub.erase(f.var);
        return body;
      }
      default: {
        Formula out = f;
        for (auto& c : out.children) c = run(c, universals, sub);
        return out;
      }
    }
  }

 private:
  SymbolId next_;
};

}  // namespace

Formula skolemize(const Formula& f) {
  std::vector<VarId> universals;
  std::map<VarId, FoTerm> sub;
  return Skolemizer(f).run(f, universals, sub);
}

// -- CNF --------------------------------------------------------------------

namespace {

using Lits = std::vector<SignedAtom>;

std::vector<Lits> cnf(const Formula& f, std::size_t limit) {
  switch (f.kind) {
    case Kind::True: return {};
    case Kind::False: return {Lits{}};
    case Kind::Atom: return {Lits{{true, f.atom}}};
    case Kind::Not:
      if (f.body().kind != Kind::Atom) throw std::invalid_argument("clausify expects NNF input");
      return {Lits{{false, f.body().atom}}};
    case Kind::Forall: return cnf(f.body(), limit);
    case Kind::Exists: throw std::invalid_argument("clausify expects skolemized input");
    case Kind::And: {
      std::vector<Lits> out;
      for (const auto& c : f.children) {
        auto part = cnf(c, limit);
        if (out.size() + part.size() > limit) throw ClauseBlowupLimit(limit);
        for (auto& l : part) out.push_back(std::move(l));
      }
      return out;
    }
    case Kind::Or: {
      std::vector<Lits> out{Lits{}};
      for (const auto& c : f.children) {
        auto part = cnf(c, limit);
        if (part.empty()) return {};  // a true disjunct
        if (out.size() * part.size() > limit) throw ClauseBlowupLimit(limit);
        std::vector<Lits> next;
        next.reserve(out.size() * part.size());
        for (const auto& a : out)
          for (const auto& b : part) {
            Lits merged = a;
            merged.insert(merged.end(), b.begin(), b.end());
            next.push_back(std::move(merged));
          }
        out = std::move(next);
      }
      return out;
    }
  }
  return {};
}

// Number of clauses distribution would produce, saturating at limit + 1.
std::size_t clause_count(const Formula& f, std::size_t limit) {
  switch (f.kind) {
    case Kind::True: return 0;
    case Kind::And: {
      std::size_t n = 0;
      for (const auto& c : f.children) n = std::min(limit + 1, n + clause_count(c, limit));
      return n;
    }
    case Kind::Or: {
      std::size_t n = 1;
      for (const auto& c : f.children) {
        std::size_t k = clause_count(c, limit);
        if (k == 0) return 0;
        n = n > (limit + 1) / k ? limit + 1 : n * k;
      }
      return std::min(n, limit + 1);
    }
    case Kind::Forall:
    case Kind::Exists: return clause_count(f.body(), limit);
    default: return 1;
  }
}

}  // namespace

ClauseSet clausify(const Formula& f, std::size_t max_clauses) {
  if (clause_count(f, max_clauses) > max_clauses) throw ClauseBlowupLimit(max_clauses);
  std::set<Clause> seen;
  ClauseSet out;
  for (auto& lits : cnf(f, max_clauses)) {
    Clause c(std::move(lits));
    if (c.is_tautology()) continue;
    if (seen.insert(c).second) out.push_back(std::move(c));
  }
  return out;
}

ClauseSet to_clauses(const Formula& f, std::size_t max_clauses) {
  return clausify(skolemize(standardize_apart(nnf(f))), max_clauses);
}

}  // namespace surfaces
