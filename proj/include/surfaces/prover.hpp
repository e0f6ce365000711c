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

// Refutation prover: binary resolution and factoring in a given-clause loop
// with forward and backward subsumption.

#ifndef SURFACES_PROVER_HPP_
#define SURFACES_PROVER_HPP_

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "surfaces/formula.hpp"
#include "surfaces/model.hpp"

namespace surfaces {

// Idempotent: no variable in the domain occurs in any bound term.
using Substitution = std::map<VarId, FoTerm>;

FoTerm substitute(const Substitution& s, const FoTerm& t);
Atom substitute(const Substitution& s, const Atom& a);
Clause substitute(const Substitution& s, const Clause& c);

// Most general unifier, with occurs check. nullopt when none exists.
std::optional<Substitution> unify(const Atom& a, const Atom& b);
std::optional<Substitution> unify(const FoTerm& a, const FoTerm& b);

// Extends `s` so that it also unifies a and b. Leaves `s` in an unspecified
// state on failure.
bool unify_into(const FoTerm& a, const FoTerm& b, Substitution& s);

// Shifts every variable of `c` by `offset`.
Clause rename(const Clause& c, VarId offset);

// Renames variables to 0..k-1 in order of first occurrence.
Clause normalize(const Clause& c);

// All binary resolvents on complementary literal pairs; tautologies dropped.
// The clauses must not share variables.
std::vector<Clause> resolve(const Clause& c1, const Clause& c2);

// All factors on pairs of unifiable same-sign literals.
std::vector<Clause> factor(const Clause& c);

// True when some instance of `general` is a subset of `specific` and
// `general` has no more literals.
bool subsumes(const Clause& general, const Clause& specific);

struct Limits {
  std::size_t max_clauses = 100'000;
  std::chrono::milliseconds max_time{10'000};
  std::size_t max_term_depth = 40;

  // Throws std::invalid_argument unless every limit is positive.
  void validate() const;
};

struct ProofStep {
  enum class Rule { Input, Resolve, Factor };

  std::size_t id = 0;
  Rule rule = Rule::Input;
  std::vector<std::size_t> parents;
  // Indices of the literals resolved upon (one per parent) or the two
  // literals merged by a factor, in the parents' literal order.
  std::vector<std::size_t> literals;
  Clause clause;
  Substitution unifier;
};

const char* to_string(ProofStep::Rule rule);

struct Refuted {
  std::vector<ProofStep> proof;
};

struct Saturated {};

struct ResourceOut {
  enum class Limit { Clauses, Time, Depth };
  Limit limit = Limit::Clauses;
};

const char* to_string(ResourceOut::Limit limit);

struct SaturationStats {
  std::size_t clauses_generated = 0;  // clauses kept, inputs included
  std::size_t given = 0;
  std::size_t subsumed = 0;
};

struct Verdict {
  std::variant<Refuted, Saturated, ResourceOut> outcome;
  SaturationStats stats;

  bool refuted() const { return std::holds_alternative<Refuted>(outcome); }
  bool saturated() const { return std::holds_alternative<Saturated>(outcome); }
  bool resource_out() const { return std::holds_alternative<ResourceOut>(outcome); }
  const std::vector<ProofStep>& proof() const { return std::get<Refuted>(outcome).proof; }
};

struct SaturationOptions {
  bool subsumption = true;
};

Verdict saturate(const ClauseSet& clauses, const Limits& limits = {}, const SaturationOptions& options = {});

// Re-derives every step from its parents and recorded unifier. Returns an
// error message for the first step that does not reproduce, nullopt if all do.
std::optional<std::string> replay(const std::vector<ProofStep>& proof);

Verdict check_consistency(const Document& doc, const Limits& limits = {});

// Refuted iff the axioms entail the goal.
Verdict prove(const Document& axioms, const Document& goal, const Limits& limits = {});

class UnsupportedQueryShape : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct QueryResult {
  // Ground bindings of the pattern's graffiti, deduplicated, in the order
  // they were derived.
  std::vector<Substitution> answers;
  Verdict verdict;
};

// `pattern` is a positive surface whose graffiti are the answer variables
// and whose contents are triples.
QueryResult query(const Document& axioms, const HGraph& pattern, const Limits& limits = {});

}  // namespace surfaces

#endif  // SURFACES_PROVER_HPP_
