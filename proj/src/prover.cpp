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

#include "surfaces/prover.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

#include "surfaces/translate.hpp"

namespace surfaces {

namespace {

constexpr const char* kAnswerIri = "urn:x-n3s:answer";
constexpr SymbolId kAnswerSymbol = std::numeric_limits<SymbolId>::max();

bool is_answer(const SignedAtom& l) {
  const auto& p = l.atom.predicate;
  if (!p.is_const()) return false;
  const auto* iri = std::get_if<Iri>(&p.constant);
  return iri && iri->value == kAnswerIri;
}

bool answers_only(const Clause& c) {
  return !c.empty() && std::all_of(c.literals().begin(), c.literals().end(), is_answer);
}

VarId var_offset(const Clause& c) {
  auto vars = clause_vars(c);
  return vars.empty() ? 0 : *vars.rbegin() + 1;
}

struct Inference {
  Clause clause;
  std::vector<std::size_t> literals;
  Substitution unifier;
};

// c1 and c2 must not share variables.
std::vector<Inference> resolvents(const Clause& c1, const Clause& c2) {
  std::vector<Inference> out;
  const auto& l1 = c1.literals();
  const auto& l2 = c2.literals();
  for (std::size_t i = 0; i < l1.size(); ++i) {
    if (is_answer(l1[i])) continue;
    for (std::size_t j = 0; j < l2.size(); ++j) {
      if (l1[i].positive == l2[j].positive || is_answer(l2[j])) continue;
      auto sigma = unify(l1[i].atom, l2[j].atom);
      if (!sigma) continue;
      std::vector<SignedAtom> lits;
      for (std::size_t k = 0; k < l1.size(); ++k)
        if (k != i) lits.push_back({l1[k].positive, substitute(*sigma, l1[k].atom)});
      for (std::size_t k = 0; k < l2.size(); ++k)
        if (k != j) lits.push_back({l2[k].positive, substitute(*sigma, l2[k].atom)});
      Clause c(std::move(lits));
      if (c.is_tautology()) continue;
      out.push_back({std::move(c), {i, j}, std::move(*sigma)});
    }
  }
  return out;
}

std::vector<Inference> factors(const Clause& c) {
  std::vector<Inference> out;
  const auto& lits = c.literals();
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (is_answer(lits[i])) continue;
    for (std::size_t j = i + 1; j < lits.size(); ++j) {
      if (lits[i].positive != lits[j].positive || is_answer(lits[j])) continue;
      auto sigma = unify(lits[i].atom, lits[j].atom);
      if (!sigma) continue;
      Clause f = substitute(*sigma, c);
      if (f.is_tautology()) continue;
      out.push_back({std::move(f), {i, j}, std::move(*sigma)});
    }
  }
  return out;
}

bool match(const FoTerm& pattern, const FoTerm& target, Substitution& s) {
  if (pattern.is_var()) {
    auto [it, inserted] = s.emplace(pattern.id, target);
    return inserted || it->second == target;
  }
  if (pattern.kind != target.kind) return false;
  if (pattern.is_const()) return pattern.constant == target.constant;
  if (pattern.id != target.id || pattern.args.size() != target.args.size()) return false;
  for (std::size_t i = 0; i < pattern.args.size(); ++i)
    if (!match(pattern.args[i], target.args[i], s)) return false;
  return true;
}

bool match(const Atom& pattern, const Atom& target, Substitution& s) {
  return match(pattern.subject, target.subject, s) && match(pattern.predicate, target.predicate, s) &&
         match(pattern.object, target.object, s);
}

bool subsumes_from(const std::vector<SignedAtom>& general, std::size_t k, const Clause& specific,
                   const Substitution& s) {
  if (k == general.size()) return true;
  for (const auto& target : specific.literals()) {
    if (target.positive != general[k].positive) continue;
    Substitution extended = s;
    if (match(general[k].atom, target.atom, extended) && subsumes_from(general, k + 1, specific, extended))
      return true;
  }
  return false;
}

}  // namespace

std::vector<Clause> resolve(const Clause& c1, const Clause& c2) {
  std::vector<Clause> out;
  for (auto& inf : resolvents(c1, c2)) out.push_back(std::move(inf.clause));
  return out;
}

std::vector<Clause> factor(const Clause& c) {
  std::vector<Clause> out;
  for (auto& inf : factors(c)) out.push_back(std::move(inf.clause));
  return out;
}

bool subsumes(const Clause& general, const Clause& specific) {
  if (general.size() > specific.size()) return false;
  return subsumes_from(general.literals(), 0, specific, {});
}

void Limits::validate() const {
  if (max_clauses == 0 || max_time.count() <= 0 || max_term_depth == 0)
    throw std::invalid_argument("limits must be positive");
}

const char* to_string(ProofStep::Rule rule) {
  switch (rule) {
    case ProofStep::Rule::Input: return "input";
    case ProofStep::Rule::Resolve: return "resolve";
    case ProofStep::Rule::Factor: return "factor";
  }
  return "?";
}

const char* to_string(ResourceOut::Limit limit) {
  switch (limit) {
    case ResourceOut::Limit::Clauses: return "clauses";
    case ResourceOut::Limit::Time: return "time";
    case ResourceOut::Limit::Depth: return "depth";
  }
  return "?";
}

// -- given-clause loop --------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

class Saturator {
 public:
  Saturator(const Limits& limits, const SaturationOptions& options, std::vector<Clause>* answers)
      : limits_(limits), options_(options), answers_(answers), deadline_(Clock::now() + limits.max_time) {}

  Verdict run(const ClauseSet& input) {
    limits_.validate();
    for (const auto& c : input) {
      ProofStep step;
      step.rule = ProofStep::Rule::Input;
      if (auto v = add(c, std::move(step))) return finish(std::move(*v));
    }
    while (!passive_.empty()) {
      if (Clock::now() > deadline_) return finish(ResourceOut{ResourceOut::Limit::Time});
      auto [weight, id] = passive_.top();
      passive_.pop();
      if (removed_[id]) continue;
      const Clause given = steps_[id].clause;
      if (options_.subsumption && forward_subsumed(given)) {
        ++stats_.subsumed;
        continue;
      }
      if (options_.subsumption) {
        for (std::size_t a : active_)
          if (!removed_[a] && subsumes(given, steps_[a].clause)) {
            removed_[a] = true;
            ++stats_.subsumed;
          }
        std::erase_if(active_, [&](std::size_t a) { return removed_[a]; });
      }
      active_.push_back(id);
      ++stats_.given;

      for (auto& inf : factors(given))
        if (auto v = derive(ProofStep::Rule::Factor, {id}, std::move(inf))) return finish(std::move(*v));

      const VarId offset = var_offset(given);
      const std::vector<std::size_t> partners = active_;
      for (std::size_t other : partners) {
        if (removed_[id]) break;
        if (removed_[other]) continue;
        Clause renamed = rename(steps_[other].clause, offset);
        for (auto& inf : resolvents(given, renamed))
          if (auto v = derive(ProofStep::Rule::Resolve, {id, other}, std::move(inf)))
            return finish(std::move(*v));
        if (Clock::now() > deadline_) return finish(ResourceOut{ResourceOut::Limit::Time});
      }
    }
    if (depth_dropped_) return finish(ResourceOut{ResourceOut::Limit::Depth});
    return finish(Saturated{});
  }

 private:
  using Outcome = std::variant<Refuted, Saturated, ResourceOut>;

  Verdict finish(Outcome outcome) { return Verdict{std::move(outcome), stats_}; }

  std::optional<Outcome> derive(ProofStep::Rule rule, std::vector<std::size_t> parents, Inference inf) {
    ProofStep step;
    step.rule = rule;
    step.parents = std::move(parents);
    step.literals = std::move(inf.literals);
    step.unifier = std::move(inf.unifier);
    return add(inf.clause, std::move(step));
  }

  // Keeps the clause unless it is redundant. Returns a final outcome when
  // the empty clause appears or a limit is hit.
  std::optional<Outcome> add(const Clause& raw, ProofStep step) {
    if (raw.is_tautology()) return std::nullopt;
    Clause c = normalize(raw);
    if (max_term_depth(c) > limits_.max_term_depth) {
      depth_dropped_ = true;
      return std::nullopt;
    }
    if (!seen_.insert(c).second) return std::nullopt;
    if (answers_ && answers_only(c)) {
      answers_->push_back(c);
      return std::nullopt;
    }
    if (options_.subsumption && !c.empty() && forward_subsumed(c)) {
      ++stats_.subsumed;
      return std::nullopt;
    }
    step.id = steps_.size();
    step.clause = c;
    steps_.push_back(std::move(step));
    removed_.push_back(false);
    ++stats_.clauses_generated;
    if (c.empty()) return Refuted{extract_proof(steps_.size() - 1)};
    if (stats_.clauses_generated > limits_.max_clauses) return ResourceOut{ResourceOut::Limit::Clauses};
    passive_.push({symbol_count(c), steps_.size() - 1});
    return std::nullopt;
  }

  bool forward_subsumed(const Clause& c) const {
    for (std::size_t a : active_)
      if (!removed_[a] && subsumes(steps_[a].clause, c)) return true;
    return false;
  }

  std::vector<ProofStep> extract_proof(std::size_t last) const {
    std::set<std::size_t> needed;
    std::vector<std::size_t> stack{last};
    while (!stack.empty()) {
      std::size_t id = stack.back();
      stack.pop_back();
      if (!needed.insert(id).second) continue;
      for (std::size_t p : steps_[id].parents) stack.push_back(p);
    }
    std::vector<ProofStep> proof;
    for (std::size_t id : needed) proof.push_back(steps_[id]);
    return proof;
  }

  Limits limits_;
  SaturationOptions options_;
  std::vector<Clause>* answers_;
  Clock::time_point deadline_;

  std::vector<ProofStep> steps_;
  std::vector<bool> removed_;
  std::vector<std::size_t> active_;
  // Smallest symbol count first, then oldest.
  std::priority_queue<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>,
                      std::greater<>>
      passive_;
  std::set<Clause> seen_;
  bool depth_dropped_ = false;
  SaturationStats stats_;
};

}  // namespace

Verdict saturate(const ClauseSet& clauses, const Limits& limits, const SaturationOptions& options) {
  return Saturator(limits, options, nullptr).run(clauses);
}

std::optional<std::string> replay(const std::vector<ProofStep>& proof) {
  std::map<std::size_t, const ProofStep*> by_id;
  for (const auto& step : proof) {
    auto where = "step " + std::to_string(step.id) + ": ";
    std::vector<const Clause*> parents;
    for (std::size_t p : step.parents) {
      auto it = by_id.find(p);
      if (it == by_id.end()) return where + "parent " + std::to_string(p) + " does not precede it";
      parents.push_back(&it->second->clause);
    }
    switch (step.rule) {
      case ProofStep::Rule::Input:
        if (!parents.empty()) return where + "input step with parents";
        break;
      case ProofStep::Rule::Resolve: {
        if (parents.size() != 2 || step.literals.size() != 2) return where + "malformed resolution step";
        const Clause& c1 = *parents[0];
        Clause c2 = rename(*parents[1], var_offset(c1));
        std::size_t i = step.literals[0], j = step.literals[1];
        if (i >= c1.size() || j >= c2.size()) return where + "literal index out of range";
        const auto& a = c1.literals()[i];
        const auto& b = c2.literals()[j];
        if (a.positive == b.positive) return where + "resolved literals have the same sign";
        if (substitute(step.unifier, a.atom) != substitute(step.unifier, b.atom)) return where + "unifier does not unify";
        std::vector<SignedAtom> lits;
        for (std::size_t k = 0; k < c1.size(); ++k)
          if (k != i) lits.push_back({c1.literals()[k].positive, substitute(step.unifier, c1.literals()[k].atom)});
        for (std::size_t k = 0; k < c2.size(); ++k)
          if (k != j) lits.push_back({c2.literals()[k].positive, substitute(step.unifier, c2.literals()[k].atom)});
        if (normalize(Clause(std::move(lits))) != step.clause) return where + "resolvent differs";
        break;
      }
      case ProofStep::Rule::Factor: {
        if (parents.size() != 1 || step.literals.size() != 2) return where + "malformed factoring step";
        const Clause& c = *parents[0];
        std::size_t i = step.literals[0], j = step.literals[1];
        if (i >= c.size() || j >= c.size()) return where + "literal index out of range";
        const auto& a = c.literals()[i];
        const auto& b = c.literals()[j];
        if (a.positive != b.positive || substitute(step.unifier, a.atom) != substitute(step.unifier, b.atom))
          return where + "factored literals do not unify";
        if (normalize(substitute(step.unifier, c)) != step.clause) return where + "factor differs";
        break;
      }
    }
    by_id.emplace(step.id, &step);
  }
  if (proof.empty() || !proof.back().clause.empty()) return std::string("proof does not end in the empty clause");
  return std::nullopt;
}

// -- entry points ---------------------------------------------------------------

namespace {

Verdict refute(const Formula& f, const Limits& limits) {
  ClauseSet clauses;
  try {
    clauses = to_clauses(f, std::min(kDefaultMaxClauses, limits.max_clauses));
  } catch (const ClauseBlowupLimit&) {
    return Verdict{ResourceOut{ResourceOut::Limit::Clauses}, {}};
  }
  return saturate(clauses, limits);
}

}  // namespace

Verdict check_consistency(const Document& doc, const Limits& limits) { return refute(translate(doc), limits); }

Verdict prove(const Document& axioms, const Document& goal, const Limits& limits) {
  return refute(Formula::make_and({translate(axioms), Formula::make_not(translate(goal))}), limits);
}

QueryResult query(const Document& axioms, const HGraph& pattern, const Limits& limits) {
  if (pattern.kind != SurfaceKind::Positive) throw UnsupportedQueryShape("a query pattern must be a positive surface");
  std::vector<SignedAtom> goal;
  for (const auto& e : pattern.contents) {
    const auto* t = std::get_if<Triple>(&e);
    if (!t) throw UnsupportedQueryShape("query patterns may only contain triples");
    goal.push_back({false, {to_fo_term(t->subject), to_fo_term(t->predicate), to_fo_term(t->object)}});
  }
  std::vector<FoTerm> vars;
  for (const auto& g : pattern.graffiti) vars.push_back(FoTerm::make_var(g.id));
  const FoTerm marker = FoTerm::make_const(make_iri(kAnswerIri));
  goal.push_back({true, {marker, marker, FoTerm::make_fn(kAnswerSymbol, std::move(vars))}});

  ClauseSet clauses;
  try {
    clauses = to_clauses(translate(axioms), std::min(kDefaultMaxClauses, limits.max_clauses));
  } catch (const ClauseBlowupLimit&) {
    return QueryResult{{}, Verdict{ResourceOut{ResourceOut::Limit::Clauses}, {}}};
  }
  clauses.push_back(Clause(std::move(goal)));

  std::vector<Clause> found;
  QueryResult result{{}, Saturator(limits, {}, &found).run(clauses)};
  std::set<std::vector<FoTerm>> distinct;
  for (const auto& c : found) {
    if (c.size() != 1 || !clause_vars(c).empty()) continue;  // disjunctive or non-ground
    const auto& tuple = c.literals().front().atom.object.args;
    if (!distinct.insert(tuple).second) continue;
    Substitution answer;
    for (std::size_t k = 0; k < pattern.graffiti.size(); ++k) answer.emplace(pattern.graffiti[k].id, tuple[k]);
    result.answers.push_back(std::move(answer));
  }
  return result;
}

}  // namespace surfaces
