// Copyright 2026 The ilj Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "gen.hpp"
#include "ilj/church.hpp"
#include "lam.hpp"
#include "print.hpp"

namespace ilj {
namespace {

using testing::lam;

Formula star(IndexSet j) { return Formula::star(std::move(j)); }

TEST(Church, VarDomain) {
  EXPECT_EQ(var_domain("x", PreTerm::var("x", {1, 2})), (IndexSet{1, 2}));
  EXPECT_TRUE(var_domain("x", PreTerm::var("y", {3})).empty());
  EXPECT_EQ(var_domain("x", PreTerm::app(PreTerm::var("x", {1}), PreTerm::var("x", {2}))), (IndexSet{1, 2}));
  EXPECT_TRUE(var_domain("x", PreTerm::abs("x", star({1}), {{1, 1}}, PreTerm::var("x", {1}))).empty());
}

TEST(Church, IsTerm) {
  EXPECT_TRUE(is_term(PreTerm::app(PreTerm::var("x", {1}), PreTerm::var("x", {2}))));
  EXPECT_FALSE(is_term(PreTerm::app(PreTerm::var("x", {1}), PreTerm::var("x", {1}))));
  EXPECT_TRUE(is_term(PreTerm::var("x", {1})));
  EXPECT_TRUE(is_term(PreTerm::bot()));
}

TEST(Church, BottomAtEmptyDomain) {
  EXPECT_TRUE(check_church({}, PreTerm::bot(), star({})));
  EXPECT_FALSE(check_church({}, PreTerm::bot(), star({1})));
}

TEST(Church, IdentityAxiom) {
  Formula a = Formula::atom("a", {{1, Point::atom("p")}, {2, Point::atom("q")}});
  ChurchContext ctx{{"x", Hypothesis{a, IndexMap::identity(a.dom())}}};
  EXPECT_TRUE(check_church(ctx, PreTerm::var("x", a.dom()), a));
  EXPECT_FALSE(check_church(ctx, PreTerm::var("x", {1}), a));
  EXPECT_EQ(erase(PreTerm::var("x", a.dom())), lam("x"));
}

// x1 : ⟨⊥_{5,6} ⇒ ⊥_{1,2}⟩id, x2 : ⟨⊥_{7,8}⟩w ⊢ x1 x2
Proof app_proof() {
  Formula f = Formula::arrow(star({5, 6}), {{5, 1}, {6, 2}}, star({1, 2}));
  Proof fun = make_axiom({Hypothesis{f, IndexMap::identity(f.dom())}, Hypothesis{star({}), {}}}, 0);
  Proof arg = make_axiom({Hypothesis{restrict(f, {}), {}}, Hypothesis{star({7, 8}), {{7, 5}, {8, 6}}}}, 1);
  return make_elim({Hypothesis{f, IndexMap::identity(f.dom())}, Hypothesis{star({7, 8}), {{7, 1}, {8, 2}}}}, fun, arg);
}

TEST(Church, ApplicationFromProof) {
  Proof p = make_intro(app_proof());
  ASSERT_TRUE(check_proof(p));
  std::vector<std::string> names{"x1"};
  PreTerm s = to_church(p, names);
  ChurchContext ctx = church_context(p, names);
  EXPECT_TRUE(is_term(s));
  EXPECT_TRUE(check_church(ctx, s, p.conclusion()));
  EXPECT_EQ(erase(s), extract_term(p, names));
  auto muts = testing::church_mutations(s);
  ASSERT_FALSE(muts.empty());
  for (const auto& m : muts) EXPECT_FALSE(check_church(ctx, m, p.conclusion())) << m.show();
}

TEST(Church, SwappedArgumentDomainsRejected) {
  Proof p = app_proof();
  std::vector<std::string> names{"x1", "x2"};
  ChurchContext ctx = church_context(p, names);
  PreTerm s = to_church(p, names);
  ASSERT_TRUE(check_church(ctx, s, p.conclusion()));
  PreTerm bad = PreTerm::app(PreTerm::var("x1", {1}), PreTerm::var("x2", {7, 8}));
  EXPECT_FALSE(check_church(ctx, bad, p.conclusion()));
}

TEST(Church, ShadowingAndPartialMapsRejected) {
  Formula a = star({1});
  ChurchContext ctx{{"x", Hypothesis{a, {{1, 1}}}}};
  PreTerm shadow = PreTerm::abs("x", star({}), {}, PreTerm::var("x", {1}));
  EXPECT_FALSE(check_church(ctx, shadow, Formula::arrow(star({}), {}, a)));
  ChurchContext partial{{"x", Hypothesis{star({1, 2}), {{1, 1}}}}};
  EXPECT_FALSE(check_church(partial, PreTerm::var("x", {1, 2}), star({1})));
}

TEST(ChurchProperty, CorpusProofs) {
  auto corpus = testing::make_corpus(11, 15, 15);
  ASSERT_GE(corpus.size(), 20u);
  for (const auto& item : corpus) {
    PreTerm s = to_church(item.proof, item.names);
    ChurchContext ctx = church_context(item.proof, item.names);
    ASSERT_TRUE(is_term(s));
    Verdict v = check_church(ctx, s, item.proof.conclusion());
    ASSERT_TRUE(v) << v.path << " " << v.message;
    ASSERT_EQ(erase(s), extract_term(item.proof, item.names));
  }
}

}  // namespace
}  // namespace ilj
