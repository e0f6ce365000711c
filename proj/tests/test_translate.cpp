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

#include <algorithm>

#include "support.hpp"
#include "surfaces/display.hpp"
#include "surfaces/oracle.hpp"
#include "surfaces/parser.hpp"
#include "surfaces/translate.hpp"

namespace surfaces {
namespace {

using testing::cx;
using testing::DocShape;
using testing::DocumentGenerator;
using testing::vx;
using F = Formula;

F atom(FoTerm s, const std::string& p, FoTerm o) { return F::make_atom({std::move(s), cx(p), std::move(o)}); }

Document learner_rule() { return parse(testing::read_text(testing::corpus_path("learners.n3s"))); }

// ¬∃s (learns(s,Physics) ∧ ¬reads(s,Newton) ∧ ¬reads(s,Einstein)), s = graffiti 0
F learner_rule_by_hand() {
  return F::make_not(F::make_exists(
      0, F::make_and({atom(vx(0), "learns", cx("Physics")), F::make_not(atom(vx(0), "reads", cx("Newton"))),
                      F::make_not(atom(vx(0), "reads", cx("Einstein")))})));
}

bool nnf_shaped(const F& f) {
  if (f.kind == F::Kind::Not) return f.body().kind == F::Kind::Atom;
  return std::all_of(f.children.begin(), f.children.end(), nnf_shaped);
}

bool has_exists(const F& f) {
  return f.kind == F::Kind::Exists || std::any_of(f.children.begin(), f.children.end(), has_exists);
}

std::vector<VarId> binders(const F& f) {
  std::vector<VarId> out;
  if (f.kind == F::Kind::Exists || f.kind == F::Kind::Forall) out.push_back(f.var);
  for (const auto& c : f.children)
    for (VarId v : binders(c)) out.push_back(v);
  return out;
}

void reverse_contents(HGraph& g) {
  std::reverse(g.contents.begin(), g.contents.end());
  for (auto& e : g.contents)
    if (auto* inner = std::get_if<Box<HGraph>>(&e)) reverse_contents(**inner);
}

TEST(Translate, LearnerRule) { EXPECT_EQ(translate(learner_rule()), learner_rule_by_hand()); }

TEST(Translate, EmptySurfaceLaws) {
  EXPECT_EQ(translate(parse("")).kind, F::Kind::True);
  Document negative = parse("() <http://www.w3.org/2000/10/swap/log#onNegativeSurface> {} .");
  EXPECT_EQ(translate(negative).kind, F::Kind::False);
  Document with_graffiti = parse("(_:x) <http://www.w3.org/2000/10/swap/log#onNegativeSurface> {} .");
  EXPECT_EQ(translate(with_graffiti).kind, F::Kind::False);
}

TEST(Translate, RootBlankNodesAreExistential) {
  Document doc = parse("@prefix : <http://example.org/ns#> .\n_:x :p :o .");
  EXPECT_EQ(translate(doc), F::make_exists(0, atom(vx(0), "p", cx("o"))));
}

TEST(Translate, RejectsOpenDocuments) {
  Document doc;
  doc.root.contents.emplace_back(Triple{BlankNode{"b"}, testing::ex("p"), testing::ex("o"), {}});
  EXPECT_THROW(translate(doc), std::invalid_argument);
}

TEST(Nnf, PushesNegationThroughExists) {
  F a = atom(vx(1), "p", cx("a"));
  EXPECT_EQ(nnf(F::make_not(F::make_exists(1, a))), F::make_forall(1, F::make_not(a)));
}

TEST(Nnf, RemovesDoubleNegation) {
  F a = atom(cx("a"), "p", cx("b"));
  EXPECT_EQ(nnf(F::make_not(F::make_not(a))), a);
}

TEST(Nnf, LearnerRule) {
  F expected = F::make_forall(0, F::make_or({F::make_not(atom(vx(0), "learns", cx("Physics"))),
                                             atom(vx(0), "reads", cx("Newton")),
                                             atom(vx(0), "reads", cx("Einstein"))}));
  F translated = translate(learner_rule());
  EXPECT_EQ(nnf(translated), expected);
  EXPECT_TRUE(oracle::equivalent_within(translated, nnf(translated), 3));
}

TEST(Nnf, SimplifiesConstants) {
  F a = atom(cx("a"), "p", cx("b"));
  EXPECT_EQ(nnf(F::make_and({a, F::make_true()})), a);
  EXPECT_EQ(nnf(F::make_or({a, F::make_not(F::make_false())})).kind, F::Kind::True);
  EXPECT_EQ(nnf(F::make_not(F::make_exists(3, F::make_true()))).kind, F::Kind::False);
}

TEST(StandardizeApart, RenamesTheSecondBinder) {
  F f = F::make_and({F::make_exists(1, atom(vx(1), "p", cx("a"))), F::make_exists(1, atom(vx(1), "q", cx("a")))});
  F g = standardize_apart(f);
  auto vars = binders(g);
  ASSERT_EQ(vars.size(), 2u);
  EXPECT_NE(vars[0], vars[1]);
  EXPECT_EQ(g.children[1].body().atom.subject, vx(vars[1]));
  EXPECT_TRUE(oracle::equivalent_within(f, g, 3));
}

TEST(StandardizeApart, LeavesDistinctBindersAlone) {
  F f = F::make_and({F::make_exists(1, atom(vx(1), "p", cx("a"))), F::make_forall(2, atom(vx(2), "q", cx("a")))});
  EXPECT_EQ(standardize_apart(f), f);
}

TEST(Skolemize, TopLevelExistentialBecomesAConstant) {
  F f = skolemize(F::make_exists(1, atom(vx(1), "p", cx("a"))));
  ASSERT_EQ(f.kind, F::Kind::Atom);
  EXPECT_TRUE(f.atom.subject.is_fn());
  EXPECT_TRUE(f.atom.subject.args.empty());
}

TEST(Skolemize, ExistentialUnderUniversalBecomesAFunction) {
  F f = skolemize(F::make_forall(1, F::make_exists(2, atom(vx(1), "r", vx(2)))));
  ASSERT_EQ(f.kind, F::Kind::Forall);
  const FoTerm& object = f.body().atom.object;
  ASSERT_TRUE(object.is_fn());
  EXPECT_GT(object.id, 2u);
  ASSERT_EQ(object.args.size(), 1u);
  EXPECT_EQ(object.args[0], vx(1));
}

TEST(Clausify, LearnerRuleIsOneClause) {
  ClauseSet clauses = to_clauses(translate(learner_rule()));
  ASSERT_EQ(clauses.size(), 1u);
  const Clause& c = clauses[0];
  ASSERT_EQ(c.size(), 3u);
  const FoTerm s = c.literals()[0].atom.subject;
  ASSERT_TRUE(s.is_var());
  Clause expected({{false, {s, cx("learns"), cx("Physics")}},
                   {true, {s, cx("reads"), cx("Newton")}},
                   {true, {s, cx("reads"), cx("Einstein")}}});
  EXPECT_EQ(c, expected);
}

TEST(Clausify, TrueAndFalse) {
  EXPECT_TRUE(clausify(F::make_true()).empty());
  ClauseSet contradiction = clausify(F::make_false());
  ASSERT_EQ(contradiction.size(), 1u);
  EXPECT_TRUE(contradiction[0].empty());
}

TEST(Clausify, DropsTautologiesAndDuplicates) {
  F a = atom(cx("a"), "p", cx("b"));
  F b = atom(cx("b"), "p", cx("c"));
  EXPECT_TRUE(clausify(F::make_or({a, F::make_not(a)})).empty());
  EXPECT_EQ(clausify(F::make_and({F::make_or({a, b}), F::make_or({b, a, a})})).size(), 1u);
}

TEST(Clausify, GuardsAgainstBlowup) {
  std::vector<F> disjuncts;
  for (int k = 0; k < 12; ++k)
    disjuncts.push_back(F::make_and({atom(cx("a" + std::to_string(k)), "p", cx("b")),
                                     atom(cx("c" + std::to_string(k)), "p", cx("d"))}));
  F f = F::make_or(disjuncts);
  EXPECT_THROW(clausify(f, 4095), ClauseBlowupLimit);
  EXPECT_EQ(clausify(f, 4096).size(), 4096u);
}

TEST(Display, LearnerRuleInTheBinaryNotation) {
  EXPECT_EQ(render_display(translate(learner_rule())),
            "∀S: learns(S, Physics) ⇒ reads(S, Newton) ∨ reads(S, Einstein)");
}

TEST(Display, Constants) {
  EXPECT_EQ(render_display(F::make_true()), "true");
  EXPECT_EQ(render_display(F::make_false()), "false");
}

TEST(Display, OneLinePerTopLevelConjunct) {
  Document doc = parse(testing::read_text(testing::corpus_path("physics/axioms.n3s")));
  auto lines = render_display_lines(translate(doc));
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "learns(a, Physics)");
}

TEST(Display, LocalNames) {
  EXPECT_EQ(local_name("http://example.org/ns#learns"), "learns");
  EXPECT_EQ(local_name("http://example.org/path/item"), "item");
}

// -- properties over generated documents ----------------------------------------

class TransformChain : public ::testing::TestWithParam<int> {};

TEST_P(TransformChain, PreservesMeaningAndSatisfiability) {
  DocumentGenerator gen(500 + GetParam(),
                        DocShape{.max_triples = 4, .iris = 3, .max_depth = 3, .max_surfaces = 3, .max_graffiti = 3});
  for (int k = 0; k < 8; ++k) {
    Document doc = gen.next();
    SCOPED_TRACE(serialize(doc));
    F t = translate(doc);
    F n = nnf(t);
    F s = standardize_apart(n);
    EXPECT_TRUE(nnf_shaped(n));
    EXPECT_TRUE(oracle::equivalent_within(t, n, 3));
    EXPECT_TRUE(oracle::equivalent_within(n, s, 3));
    auto vars = binders(s);
    EXPECT_EQ(std::set<VarId>(vars.begin(), vars.end()).size(), vars.size());
    F sk = skolemize(s);
    EXPECT_FALSE(has_exists(sk));
    EXPECT_EQ(oracle::is_sat(oracle::brute_sat(t, 3)),
              oracle::is_sat(oracle::brute_sat(clauses_to_formula(clausify(sk)), 3)));
    Document reversed = doc;
    reverse_contents(reversed.root);
    EXPECT_TRUE(oracle::equivalent_within(t, translate(reversed), 3));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, TransformChain, ::testing::Range(0, 5));

}  // namespace
}  // namespace surfaces
