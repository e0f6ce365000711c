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

// First-order formulas over the single ternary predicate triple/3.

#ifndef SURFACES_FORMULA_HPP_
#define SURFACES_FORMULA_HPP_

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "surfaces/model.hpp"

namespace surfaces {

using VarId = std::uint64_t;
using SymbolId = std::uint64_t;

struct FoTerm {
  enum class Kind : std::uint8_t { Const, Var, Fn };

  Kind kind = Kind::Const;
  Term constant;  // Const only: an IRI or literal
  std::uint64_t id = 0;  // Var: variable id; Fn: function symbol
  std::vector<FoTerm> args;  // Fn only

  static FoTerm make_const(Term t);
  static FoTerm make_var(VarId v);
  static FoTerm make_fn(SymbolId f, std::vector<FoTerm> args);

  bool is_const() const { return kind == Kind::Const; }
  bool is_var() const { return kind == Kind::Var; }
  bool is_fn() const { return kind == Kind::Fn; }

  bool operator==(const FoTerm& other) const;
  std::strong_ordering operator<=>(const FoTerm& other) const;
};

struct Atom {
  FoTerm subject;
  FoTerm predicate;
  FoTerm object;

  bool operator==(const Atom&) const = default;
  std::strong_ordering operator<=>(const Atom& other) const;
};

struct Formula {
  enum class Kind : std::uint8_t { Atom, And, Or, Not, Exists, Forall, True, False };

  Kind kind = Kind::True;
  surfaces::Atom atom;            // Atom
  std::vector<Formula> children;  // And, Or: operands; Not, Exists, Forall: one body
  VarId var = 0;                  // Exists, Forall
  std::string hint;               // display name for the bound variable

  static Formula make_atom(surfaces::Atom a);
  static Formula make_true();
  static Formula make_false();
  static Formula make_not(Formula f);
  static Formula make_and(std::vector<Formula> fs);
  static Formula make_or(std::vector<Formula> fs);
  static Formula make_exists(VarId v, Formula body, std::string hint = {});
  static Formula make_forall(VarId v, Formula body, std::string hint = {});

  const Formula& body() const { return children.front(); }

  bool operator==(const Formula& other) const;
};

struct SignedAtom {
  bool positive = true;
  Atom atom;

  bool operator==(const SignedAtom&) const = default;
  std::strong_ordering operator<=>(const SignedAtom& other) const;
};

// A disjunction of signed atoms, kept sorted and free of duplicates.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<SignedAtom> literals);

  const std::vector<SignedAtom>& literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }
  bool is_tautology() const;

  bool operator==(const Clause&) const = default;
  auto operator<=>(const Clause& other) const { return literals_ <=> other.literals_; }

 private:
  std::vector<SignedAtom> literals_;
};

using ClauseSet = std::vector<Clause>;

// -- inspection ---------------------------------------------------------------

void collect_vars(const FoTerm& t, std::set<VarId>& out);
void collect_vars(const Atom& a, std::set<VarId>& out);
std::set<VarId> free_vars(const Formula& f);
std::set<VarId> clause_vars(const Clause& c);
std::size_t term_depth(const FoTerm& t);
std::size_t max_term_depth(const Clause& c);
std::size_t symbol_count(const Clause& c);
bool is_ground(const Formula& f);

// -- printing -------------------------------------------------------------------

std::string to_string(const FoTerm& t);
std::string to_string(const Atom& a);
std::string to_string(const SignedAtom& l);
std::string to_string(const Clause& c);
std::string to_string(const Formula& f);

// Universal closure of the conjunction of the clauses.
Formula clauses_to_formula(const ClauseSet& clauses);

}  // namespace surfaces

#endif  // SURFACES_FORMULA_HPP_
