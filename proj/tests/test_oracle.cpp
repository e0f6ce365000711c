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
#include "surfaces/translate.hpp"

namespace surfaces {
namespace {

using oracle::Interpretation;
using oracle::NoModelUpTo;
using oracle::SatWitness;
using testing::cx;
using testing::DocShape;
using testing::DocumentGenerator;
using testing::ex;
using testing::vx;
using F = Formula;

F atom(FoTerm s, const std::string& p, FoTerm o) { return F::make_atom({std::move(s), cx(p), std::move(o)}); }

F learner_rule() { return translate(parse(testing::read_text(testing::corpus_path("learners.n3s")))); }

Interpretation named(const std::vector<std::string>& names) {
  Interpretation i;
  i.domain_size = names.size();
  for (std::size_t k = 0; k < names.size(); ++k) i.const_map[ex(names[k])] = static_cast<oracle::Element>(k);
  return i;
}

TEST(Eval, Constants) {
  Interpretation i = named({"a"});
  EXPECT_TRUE(oracle::eval(F::make_true(), i));
  EXPECT_FALSE(oracle::eval(F::make_false(), i));
}

TEST(Eval, LearnerRuleHoldsOnTheEmptyRelation) {
  EXPECT_TRUE(oracle::eval(learner_rule(), named({"learns", "Physics", "reads", "Newton", "Einstein"})));
}

TEST(Eval, LearnerRuleFailsWhenALearnerReadsNeither) {
  Interpretation i = named({"a", "learns", "Physics", "reads", "Newton", "Einstein"});
  i.triple_relation.insert({0, 1, 2});
  F f = F::make_and({learner_rule(), atom(cx("a"), "learns", cx("Physics"))});
  EXPECT_FALSE(oracle::eval(f, i));
  i.triple_relation.insert({0, 3, 5});
  EXPECT_TRUE(oracle::eval(f, i));
}

TEST(Eval, QuantifiersRangeOverTheDomain) {
  Interpretation i = named({"p", "a"});
  i.triple_relation.insert({1, 0, 1});
  EXPECT_TRUE(oracle::eval(F::make_exists(0, atom(vx(0), "p", cx("a"))), i));
  EXPECT_FALSE(oracle::eval(F::make_forall(0, atom(vx(0), "p", cx("a"))), i));
  EXPECT_TRUE(oracle::eval(atom(vx(4), "p", cx("a")), i, {{4, 1}}));
}

TEST(Eval, SkolemFunctions) {
  Interpretation i = named({"p", "a"});
  i.fn_maps[9] = oracle::FunctionTable{1, {1, 0}};
  i.triple_relation.insert({0, 0, 1});
  EXPECT_TRUE(oracle::eval(F::make_atom({FoTerm::make_fn(9, {cx("a")}), cx("p"), FoTerm::make_fn(9, {cx("p")})}), i));
}

TEST(Eval, UnboundSymbols) {
  Interpretation i = named({"p"});
  EXPECT_THROW(oracle::eval(atom(cx("zzz"), "p", cx("p")), i), oracle::UnboundSymbol);
  EXPECT_THROW(oracle::eval(atom(vx(3), "p", cx("p")), i), oracle::UnboundSymbol);
  EXPECT_THROW(oracle::eval(F::make_atom({FoTerm::make_fn(1, {}), cx("p"), cx("p")}), i), oracle::UnboundSymbol);
}

TEST(BruteSat, FalseHasNoModel) {
  auto r = oracle::brute_sat(F::make_false(), 2);
  ASSERT_TRUE(std::holds_alternative<NoModelUpTo>(r));
  EXPECT_EQ(std::get<NoModelUpTo>(r).max_domain, 2u);
}

TEST(BruteSat, LearnerRuleHasAOneElementModel) {
  F f = learner_rule();
  auto r = oracle::brute_sat(f, 1);
  ASSERT_TRUE(oracle::is_sat(r));
  const auto& model = std::get<SatWitness>(r).model;
  EXPECT_EQ(model.domain_size, 1u);
  EXPECT_TRUE(oracle::eval(f, model));
}

TEST(BruteSat, GroundClashIsDefinitivelyUnsat) {
  Document doc = parse(R"(@prefix : <http://example.org/ns#> .
@prefix log: <http://www.w3.org/2000/10/swap/log#> .
:a :p :b .
() log:onNegativeSurface { :a :p :b } .
)");
  auto r = oracle::brute_sat(translate(doc), 2);
  ASSERT_TRUE(std::holds_alternative<NoModelUpTo>(r));
  EXPECT_TRUE(std::get<NoModelUpTo>(r).definitive);
}

TEST(BruteSat, GroundModelsUseDistinctElements) {
  F f = F::make_and({atom(cx("a"), "p", cx("b")), F::make_not(atom(cx("b"), "p", cx("a")))});
  auto r = oracle::brute_sat(f, 1);
  ASSERT_TRUE(oracle::is_sat(r));
  EXPECT_TRUE(oracle::eval(f, std::get<SatWitness>(r).model));
}

TEST(BruteSat, NeedsTwoElementsForAnIrreflexiveSuccessor) {
  F f = F::make_and({F::make_forall(0, F::make_exists(1, atom(vx(0), "r", vx(1)))),
                     F::make_forall(2, F::make_not(atom(vx(2), "r", vx(2))))});
  EXPECT_FALSE(oracle::is_sat(oracle::brute_sat(f, 1)));
  auto r = oracle::brute_sat(f, 2);
  ASSERT_TRUE(oracle::is_sat(r));
  EXPECT_EQ(std::get<SatWitness>(r).model.domain_size, 2u);
  EXPECT_FALSE(std::get<NoModelUpTo>(oracle::brute_sat(F::make_and({f, F::make_false()}), 2)).definitive);
}

TEST(BruteSat, EnumeratesSkolemTables) {
  F f = F::make_forall(0, F::make_and({atom(vx(0), "r", FoTerm::make_fn(50, {vx(0)})),
                                       F::make_not(atom(vx(0), "r", vx(0)))}));
  EXPECT_FALSE(oracle::is_sat(oracle::brute_sat(f, 1)));
  auto r = oracle::brute_sat(f, 2);
  ASSERT_TRUE(oracle::is_sat(r));
  const auto& model = std::get<SatWitness>(r).model;
  ASSERT_TRUE(model.fn_maps.contains(50));
  EXPECT_TRUE(oracle::eval(f, model));
}

TEST(BruteSat, RespectsTheNodeBudget) {
  F f = F::make_forall(0, F::make_forall(1, F::make_exists(2, F::make_and({atom(vx(0), "r", vx(2)),
                                                                          F::make_not(atom(vx(2), "r", vx(1)))}))));
  EXPECT_THROW(oracle::brute_sat(f, 4, 5), oracle::SearchSpaceLimit);
}

TEST(EquivalentWithin, DistinguishesNonEquivalentFormulas) {
  F pa = atom(cx("a"), "p", cx("b"));
  F pb = atom(cx("b"), "p", cx("a"));
  EXPECT_FALSE(oracle::equivalent_within(pa, pb, 2));
  EXPECT_TRUE(oracle::equivalent_within(pa, F::make_and({pa, F::make_or({pa, pb})}), 3));
  F all = F::make_forall(0, atom(vx(0), "p", cx("a")));
  F some = F::make_exists(0, atom(vx(0), "p", cx("a")));
  EXPECT_TRUE(oracle::equivalent_within(all, some, 1));
  EXPECT_FALSE(oracle::equivalent_within(all, some, 2));
}

TEST(Pad, CopiesElementZero) {
  Interpretation i = named({"p", "a"});
  i.triple_relation.insert({0, 0, 1});
  i.triple_relation.insert({1, 0, 0});
  Interpretation padded = oracle::pad(i);
  EXPECT_EQ(padded.domain_size, 3u);
  EXPECT_TRUE(padded.triple_relation.contains({2, 0, 1}));
  EXPECT_TRUE(padded.triple_relation.contains({1, 0, 2}));
  EXPECT_TRUE(padded.triple_relation.contains({1, 2, 2}));
}

class GeneratedFormulas : public ::testing::TestWithParam<int> {};

TEST_P(GeneratedFormulas, WitnessesAreValidAndSurvivePadding) {
  DocumentGenerator gen(300 + GetParam(),
                        DocShape{.max_triples = 5, .iris = 3, .max_depth = 3, .max_surfaces = 3, .max_graffiti = 3});
  for (int k = 0; k < 10; ++k) {
    F f = translate(gen.next());
    for (F g : {f, clauses_to_formula(to_clauses(f))}) {
      auto r = oracle::brute_sat(g, 3);
      if (!oracle::is_sat(r)) continue;
      const auto& model = std::get<SatWitness>(r).model;
      EXPECT_TRUE(oracle::eval(g, model)) << to_string(g);
      Interpretation bigger = model;
      for (int extra = 0; extra < 2; ++extra) {
        bigger = oracle::pad(bigger);
        EXPECT_TRUE(oracle::eval(g, bigger)) << to_string(g);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, GeneratedFormulas, ::testing::Range(0, 5));

}  // namespace
}  // namespace surfaces
