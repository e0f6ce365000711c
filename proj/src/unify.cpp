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

#include <unordered_map>

#include "surfaces/prover.hpp"

namespace surfaces {

FoTerm substitute(const Substitution& s, const FoTerm& t) {
  if (t.is_var()) {
    auto it = s.find(t.id);
    return it == s.end() ? t : it->second;
  }
  if (!t.is_fn()) return t;
  std::vector<FoTerm> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(substitute(s, a));
  return FoTerm::make_fn(t.id, std::move(args));
}

Atom substitute(const Substitution& s, const Atom& a) {
  return {substitute(s, a.subject), substitute(s, a.predicate), substitute(s, a.object)};
}

Clause substitute(const Substitution& s, const Clause& c) {
  std::vector<SignedAtom> lits;
  lits.reserve(c.size());
  for (const auto& l : c.literals()) lits.push_back({l.positive, substitute(s, l.atom)});
  return Clause(std::move(lits));
}

namespace {

bool occurs(VarId v, const FoTerm& t) {
  if (t.is_var()) return t.id == v;
  for (const auto& a : t.args)
    if (occurs(v, a)) return true;
  return false;
}

void bind(Substitution& s, VarId v, const FoTerm& t) {
  Substitution single{{v, t}};
  for (auto& [_, value] : s) value = substitute(single, value);
  s.emplace(v, t);
}

}  // namespace

bool unify_into(const FoTerm& a, const FoTerm& b, Substitution& s) {
  FoTerm x = substitute(s, a);
  FoTerm y = substitute(s, b);
  if (x.is_var() || y.is_var()) {
    if (x == y) return true;
    if (!x.is_var()) std::swap(x, y);
    if (occurs(x.id, y)) return false;
    bind(s, x.id, y);
    return true;
  }
  if (x.kind != y.kind) return false;
  if (x.is_const()) return x.constant == y.constant;
  if (x.id != y.id || x.args.size() != y.args.size()) return false;
  for (std::size_t i = 0; i < x.args.size(); ++i)
    if (!unify_into(x.args[i], y.args[i], s)) return false;
  return true;
}

std::optional<Substitution> unify(const FoTerm& a, const FoTerm& b) {
  Substitution s;
  if (!unify_into(a, b, s)) return std::nullopt;
  return s;
}

std::optional<Substitution> unify(const Atom& a, const Atom& b) {
  Substitution s;
  if (!unify_into(a.subject, b.subject, s) || !unify_into(a.predicate, b.predicate, s) ||
      !unify_into(a.object, b.object, s))
    return std::nullopt;
  return s;
}

namespace {

FoTerm shift(const FoTerm& t, VarId offset) {
  if (t.is_var()) return FoTerm::make_var(t.id + offset);
  if (!t.is_fn()) return t;
  std::vector<FoTerm> args;
  for (const auto& a : t.args) args.push_back(shift(a, offset));
  return FoTerm::make_fn(t.id, std::move(args));
}

FoTerm renumber(const FoTerm& t, std::unordered_map<VarId, VarId>& map) {
  if (t.is_var()) {
    auto [it, _] = map.emplace(t.id, map.size());
    return FoTerm::make_var(it->second);
  }
  if (!t.is_fn()) return t;
  std::vector<FoTerm> args;
  for (const auto& a : t.args) args.push_back(renumber(a, map));
  return FoTerm::make_fn(t.id, std::move(args));
}

}  // namespace

Clause rename(const Clause& c, VarId offset) {
  std::vector<SignedAtom> lits;
  for (const auto& l : c.literals())
    lits.push_back({l.positive, {shift(l.atom.subject, offset), shift(l.atom.predicate, offset),
                                 shift(l.atom.object, offset)}});
  return Clause(std::move(lits));
}

Clause normalize(const Clause& c) {
  std::unordered_map<VarId, VarId> map;
  std::vector<SignedAtom> lits;
  for (const auto& l : c.literals())
    lits.push_back({l.positive, {renumber(l.atom.subject, map), renumber(l.atom.predicate, map),
                                 renumber(l.atom.object, map)}});
  return Clause(std::move(lits));
}

}  // namespace surfaces
