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


#include <gtest/gtest.h>

#include "support.hpp"
#include "surfaces/oracle.hpp"
#include "surfaces/parser.hpp"
#include "surfaces/prover.hpp"
#include "surfaces/translate.hpp"

namespace surfaces {
namespace {

using testing::cx;
using testing::DocShape;
using testing::DocumentGenerator;
using testing::TermGenerator;
using testing::vx;
using F = Formula;

Atom at(FoTerm s, const std::string& p, FoTerm o) { return {std::move(s), cx(p), std::move(o)}; }
SignedAtom pos(Atom a) { return {true, std::move(a)}; }
SignedAtom neg(Atom a) { return {false, std::move(a)}; }

Document corpus(const std::string& name) { return parse(testing::read_text(testing::corpus_path(name))); }

Clause learner_clause(VarId s) {
  return Clause({neg(at(vx(s), "learns", cx("Physics"))), pos(at(vx(s), "reads", cx("Newton"))),
                 pos(at(vx(s), "reads", cx("Einstein")))});
}

std::vector<std::string> fingerprint(const Verdict& v) {
  std::vector<std::string> out{v.refuted() ? "refuted" : v.saturated() ? "saturated" : "resource-out",
                               std::to_string(v.stats.clauses_generated), std::to_string(v.stats.given)};
  if (v.refuted())
    for (const auto& s : v.proof()) {
      std::string line = std::to_string(s.id) + " " + to_string(s.rule) + " " + to_string(s.clause);
      for (auto p : s.parents) line += " " + std::to_string(p);
      out.push_back(line);
    }
  return out;
}

// -- unification ------------------------------------------------------------------

TEST(Unify, TextbookMgu) {
  auto s = unify(at(vx(0), "p", cx("a")), at(cx("b"), "p", vx(1)));
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, (Substitution{{0, cx("b")}, {1, cx("a")}}));
}

TEST(Unify, ConstantClash) { EXPECT_FALSE(unify(at(vx(0), "p", vx(0)), at(cx("a"), "p", cx("b")))); }

TEST(Unify, OccursCheck) {
  EXPECT_FALSE(unify(at(vx(0), "p", FoTerm::make_fn(9, {vx(0)})), at(vx(1), "p", vx(1))));
}

TEST(Unify, ChainsBindings) {
  auto s = unify(at(vx(0), "p", vx(1)), at(vx(1), "p", FoTerm::make_fn(9, {cx("a")})));
  ASSERT_TRUE(s);
  EXPECT_EQ(substitute(*s, vx(0)), FoTerm::make_fn(9, {cx("a")}));
  EXPECT_EQ(substitute(*s, vx(1)), FoTerm::make_fn(9, {cx("a")}));
}

TEST(Unify, RandomPairsGiveIdempotentUnifiers) {
  TermGenerator gen(42);
  std::size_t unifiable = 0, attempts = 0;
  while (unifiable < 1000) {
    ++attempts;
    ASSERT_LT(attempts, 200000u);
    Atom a = gen.atom(3, 0);
    Atom b;
    if (attempts % 2 == 0) {
      Substitution theta;
      for (VarId v = 0; v < 4; ++v) theta[v] = gen.term(2, 10);
      b = substitute(theta, a);
    } else {
      b = gen.atom(3, 10);
    }
    auto s = unify(a, b);
    if (!s) continue;
    ++unifiable;
    EXPECT_EQ(substitute(*s, a), substitute(*s, b));
    for (const auto& [v, t] : *s) {
      EXPECT_EQ(substitute(*s, t), t) << "not idempotent at X" << v;
      std::set<VarId> vars;
      collect_vars(t, vars);
      EXPECT_FALSE(vars.contains(v));
    }
  }
}

TEST(Unify, MguIsMostGeneral) {
  // Any ground unifier of the pair factors through the mgu.
  TermGenerator gen(5);
  std::size_t checked = 0;
  for (int k = 0; k < 5000 && checked < 200; ++k) {
    Atom a = gen.atom(2, 0);
    Substitution ground;
    for (VarId v = 0; v < 4; ++v) ground[v] = cx("e" + std::to_string(gen.small(2)));
    Atom b = substitute(ground, gen.atom(2, 0));
    auto s = unify(a, b);
    if (!s || substitute(ground, a) != b) continue;
    ++checked;
    EXPECT_EQ(substitute(ground, substitute(*s, a)), substitute(ground, a));
  }
  EXPECT_GT(checked, 0u);
}

// -- inference rules ----------------------------------------------------------------

TEST(Resolve, FactAgainstLearnerRule) {
  Clause fact({pos(at(cx("a"), "learns", cx("Physics")))});
  auto out = resolve(fact, learner_clause(0));
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], Clause({pos(at(cx("a"), "reads", cx("Newton"))), pos(at(cx("a"), "reads", cx("Einstein")))}));
}

TEST(Resolve, ComplementaryUnitsGiveTheEmptyClause) {
  Atom a = at(cx("a"), "p", cx("b"));
  auto out = resolve(Clause({pos(a)}), Clause({neg(a)}));
  ASSERT_EQ(out.size(), 1u);
  EXPECT_TRUE(out[0].empty());
}

TEST(Resolve, NoComplementaryPair) {
  EXPECT_TRUE(resolve(Clause({pos(at(cx("a"), "p", cx("b")))}), Clause({pos(at(cx("a"), "p", cx("b")))})).empty());
  EXPECT_TRUE(resolve(Clause({pos(at(cx("a"), "p", cx("b")))}), Clause({neg(at(cx("a"), "p", cx("c")))})).empty());
}

TEST(Resolve, DropsTautologies) {
  Clause c1({pos(at(cx("a"), "p", cx("b"))), neg(at(cx("c"), "p", cx("d")))});
  Clause c2({neg(at(cx("a"), "p", cx("b"))), pos(at(cx("c"), "p", cx("d")))});
  EXPECT_TRUE(resolve(c1, c2).empty());
}

TEST(Factor, MergesUnifiableLiterals) {
  auto out = factor(Clause({pos(at(vx(0), "p", cx("a"))), pos(at(cx("b"), "p", vx(1)))}));
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], Clause({pos(at(cx("b"), "p", cx("a")))}));
}

TEST(Factor, GroundClauseHasNoFactors) {
  EXPECT_TRUE(factor(Clause({pos(at(cx("a"), "p", cx("b"))), pos(at(cx("b"), "p", cx("a")))})).empty());
}

TEST(Factor, NeededForTheTwoLiteralPair) {
  ClauseSet clauses{Clause({pos(at(vx(0), "P", cx("o"))), pos(at(vx(1), "P", cx("o")))}),
                    Clause({neg(at(vx(0), "P", cx("o"))), neg(at(vx(1), "P", cx("o")))})};
  Verdict v = saturate(clauses);
  ASSERT_TRUE(v.refuted());
  bool factored = false;
  for (const auto& s : v.proof()) factored = factored || s.rule == ProofStep::Rule::Factor;
  EXPECT_TRUE(factored);
  EXPECT_EQ(replay(v.proof()), std::nullopt);
}

TEST(Subsumes, InstancesAndSubsets) {
  Clause general({pos(at(vx(0), "p", cx("a")))});
  Clause specific({pos(at(cx("b"), "p", cx("a"))), neg(at(cx("c"), "q", cx("d")))});
  EXPECT_TRUE(subsumes(general, specific));
  EXPECT_FALSE(subsumes(specific, general));
  EXPECT_FALSE(subsumes(Clause({pos(at(vx(0), "p", vx(0)))}), Clause({pos(at(cx("a"), "p", cx("b")))})));
  EXPECT_FALSE(subsumes(Clause({pos(at(vx(0), "p", cx("a"))), pos(at(vx(0), "q", cx("a")))}),
                        Clause({pos(at(cx("b"), "p", cx("a")))})));
}

// -- saturation ---------------------------------------------------------------------

TEST(Saturate, FalseIsRefutedByItsInput) {
  Verdict v = saturate(clausify(F::make_false()));
  ASSERT_TRUE(v.refuted());
  ASSERT_EQ(v.proof().size(), 1u);
  EXPECT_EQ(v.proof()[0].rule, ProofStep::Rule::Input);
  EXPECT_EQ(replay(v.proof()), std::nullopt);
}

TEST(Saturate, TrueSaturates) { EXPECT_TRUE(saturate(clausify(F::make_true())).saturated()); }

TEST(Saturate, PhysicsWithNegatedGoal) {
  ClauseSet clauses{Clause({pos(at(cx("a"), "learns", cx("Physics")))}), learner_clause(0),
                    Clause({neg(at(cx("a"), "reads", cx("Newton")))}),
                    Clause({neg(at(cx("a"), "reads", cx("Einstein")))})};
  Verdict v = saturate(clauses);
  ASSERT_TRUE(v.refuted());
  EXPECT_EQ(replay(v.proof()), std::nullopt);
  EXPECT_FALSE(oracle::is_sat(oracle::brute_sat(clauses_to_formula(clauses), 4)));
}

TEST(Saturate, DepthLimit) {
  ClauseSet clauses{Clause({pos(at(cx("a"), "p", cx("o")))}),
                    Clause({neg(at(vx(0), "p", cx("o"))), pos(at(FoTerm::make_fn(9, {vx(0)}), "p", cx("o")))})};
  Verdict v = saturate(clauses, Limits{.max_clauses = 100000, .max_time = std::chrono::seconds(10), .max_term_depth = 5});
  ASSERT_TRUE(v.resource_out());
  EXPECT_EQ(std::get<ResourceOut>(v.outcome).limit, ResourceOut::Limit::Depth);
}

TEST(Saturate, ClauseLimit) {
  ClauseSet clauses{Clause({pos(at(cx("a"), "p", cx("o")))}),
                    Clause({neg(at(vx(0), "p", cx("o"))), pos(at(FoTerm::make_fn(9, {vx(0)}), "p", cx("o")))})};
  Verdict v = saturate(clauses, Limits{.max_clauses = 10});
  ASSERT_TRUE(v.resource_out());
  EXPECT_EQ(std::get<ResourceOut>(v.outcome).limit, ResourceOut::Limit::Clauses);
}

TEST(Saturate, TimeLimit) {
  ClauseSet clauses{Clause({pos(at(cx("a"), "p", cx("o")))}),
                    Clause({neg(at(vx(0), "p", cx("o"))), pos(at(FoTerm::make_fn(9, {vx(0)}), "p", cx("o")))})};
  Verdict v = saturate(clauses, Limits{.max_clauses = 100000000, .max_time = std::chrono::milliseconds(30),
                                       .max_term_depth = 100000000});
  ASSERT_TRUE(v.resource_out());
  EXPECT_EQ(std::get<ResourceOut>(v.outcome).limit, ResourceOut::Limit::Time);
}

TEST(Limits, MustBePositive) {
  EXPECT_THROW(Limits{.max_clauses = 0}.validate(), std::invalid_argument);
  EXPECT_THROW(saturate({}, Limits{.max_term_depth = 0}), std::invalid_argument);
  EXPECT_NO_THROW(Limits{}.validate());
}

TEST(Replay, DetectsTampering) {
  Verdict v = check_consistency(corpus("clash/clash01.n3s"));
  ASSERT_TRUE(v.refuted());
  ASSERT_EQ(replay(v.proof()), std::nullopt);
  auto proof = v.proof();
  proof.back().clause = Clause({pos(at(cx("x"), "p", cx("y")))});
  EXPECT_NE(replay(proof), std::nullopt);
  proof = v.proof();
  proof.back().parents = {proof.back().id + 1, proof.back().id + 2};
  EXPECT_NE(replay(proof), std::nullopt);
  proof = v.proof();
  proof.pop_back();
  EXPECT_NE(replay(proof), std::nullopt);
}

// -- entry points -------------------------------------------------------------------

TEST(CheckConsistency, Examples) {
  Document clash = parse(R"(@prefix : <http://example.org/ns#> .
@prefix log: <http://www.w3.org/2000/10/swap/log#> .
:a :p :b .
() log:onNegativeSurface { :a :p :b . } .
)");
  Verdict v = check_consistency(clash);
  ASSERT_TRUE(v.refuted());
  EXPECT_EQ(v.proof().size(), 3u);  // two inputs and their resolvent
  EXPECT_TRUE(check_consistency(parse("")).saturated());
  EXPECT_TRUE(check_consistency(corpus("learners.n3s")).saturated());
  EXPECT_TRUE(check_consistency(corpus("empty-negative.n3s")).refuted());
}

TEST(CheckConsistency, BlowupIsAResourceOut) {
  Verdict v = check_consistency(corpus("blowup.n3s"));
  ASSERT_TRUE(v.resource_out());
  EXPECT_EQ(std::get<ResourceOut>(v.outcome).limit, ResourceOut::Limit::Clauses);
}

TEST(Prove, Examples) {
  EXPECT_TRUE(prove(corpus("physics/axioms.n3s"), corpus("physics/goal.n3s")).refuted());
  EXPECT_TRUE(prove(corpus("physics/axioms-without-fact.n3s"), corpus("physics/goal.n3s")).saturated());
  EXPECT_TRUE(prove(corpus("physics/axioms.n3s"), parse("")).refuted());
  EXPECT_TRUE(prove(parse(""), corpus("physics/contingent.n3s")).saturated());
}

TEST(Query, HornAnswer) {
  Document pattern = corpus("query/who-reads-newton.n3s");
  QueryResult r = query(corpus("query/horn.n3s"), pattern.root);
  ASSERT_EQ(r.answers.size(), 1u);
  EXPECT_EQ(r.answers[0], (Substitution{{pattern.root.graffiti[0].id, cx("a")}}));
  EXPECT_TRUE(r.verdict.saturated());
}

TEST(Query, BooleanQuestions) {
  QueryResult yes = query(corpus("query/horn.n3s"), corpus("query/ask-fact.n3s").root);
  ASSERT_EQ(yes.answers.size(), 1u);
  EXPECT_TRUE(yes.answers[0].empty());
  QueryResult no = query(corpus("query/horn.n3s"), corpus("query/ask-absent.n3s").root);
  EXPECT_TRUE(no.answers.empty());
  EXPECT_TRUE(no.verdict.saturated());
}

TEST(Query, RejectsNestedPatterns) {
  EXPECT_THROW(query(corpus("query/horn.n3s"), corpus("learners.n3s").root), UnsupportedQueryShape);
}

TEST(Query, DisjunctiveConsequencesAreNotAnswers) {
  Document pattern = corpus("query/who-reads-newton.n3s");
  QueryResult r = query(corpus("physics/axioms.n3s"), pattern.root);
  EXPECT_TRUE(r.answers.empty());
}

// -- properties ----------------------------------------------------------------------

class GroundDocuments : public ::testing::TestWithParam<int> {};

TEST_P(GroundDocuments, VerdictsMatchTheOracleAndProofsAreSound) {
  DocumentGenerator gen(900 + GetParam(), DocShape{.max_triples = 6, .iris = 4, .max_depth = 3, .max_surfaces = 4});
  for (int k = 0; k < 25; ++k) {
    Document doc = gen.next();
    SCOPED_TRACE(serialize(doc));
    F f = translate(doc);
    ClauseSet inputs = to_clauses(f);
    Verdict with = saturate(inputs);
    Verdict without = saturate(inputs, {}, SaturationOptions{.subsumption = false});
    auto sat = oracle::brute_sat(f, 1);
    ASSERT_FALSE(with.resource_out());
    EXPECT_EQ(with.refuted(), !oracle::is_sat(sat));
    if (!oracle::is_sat(sat)) {
      EXPECT_TRUE(std::get<oracle::NoModelUpTo>(sat).definitive);
    }
    EXPECT_EQ(with.refuted(), without.refuted());
    EXPECT_EQ(fingerprint(with), fingerprint(saturate(inputs)));
    if (!with.refuted()) continue;
    EXPECT_EQ(replay(with.proof()), std::nullopt);
    F premises = clauses_to_formula(inputs);
    for (const auto& step : with.proof())
      EXPECT_FALSE(oracle::is_sat(
          oracle::brute_sat(F::make_and({premises, F::make_not(clauses_to_formula({step.clause}))}), 3)))
          << to_string(step.clause);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, GroundDocuments, ::testing::Range(0, 8));

class QuantifiedDocuments : public ::testing::TestWithParam<int> {};

TEST_P(QuantifiedDocuments, ProofsReplayAndAreSoundUpToDomainThree) {
  DocumentGenerator gen(700 + GetParam(),
                        DocShape{.max_triples = 5, .iris = 3, .max_depth = 3, .max_surfaces = 3, .max_graffiti = 3});
  for (int k = 0; k < 15; ++k) {
    Document doc = gen.next();
    SCOPED_TRACE(serialize(doc));
    ClauseSet inputs = to_clauses(translate(doc));
    Verdict v = saturate(inputs, Limits{.max_clauses = 2000});
    EXPECT_EQ(fingerprint(v), fingerprint(saturate(inputs, Limits{.max_clauses = 2000})));
    if (v.saturated()) {
      EXPECT_TRUE(oracle::is_sat(oracle::brute_sat(clauses_to_formula(inputs), 3)));
    }
    if (!v.refuted()) continue;
    EXPECT_FALSE(oracle::is_sat(oracle::brute_sat(clauses_to_formula(inputs), 3)));
    EXPECT_EQ(replay(v.proof()), std::nullopt);
    F premises = clauses_to_formula(inputs);
    for (const auto& step : v.proof())
      EXPECT_FALSE(oracle::is_sat(
          oracle::brute_sat(F::make_and({premises, F::make_not(clauses_to_formula({step.clause}))}), 3)))
          << to_string(step.clause);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, QuantifiedDocuments, ::testing::Range(0, 6));

}  // namespace
}  // namespace surfaces
