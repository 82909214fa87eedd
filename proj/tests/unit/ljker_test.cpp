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
#include "ilj/ljker.hpp"
#include "lam.hpp"
#include "print.hpp"

namespace ilj {
namespace {

using testing::lam;

Formula star(IndexSet j) { return Formula::star(std::move(j)); }
Hypothesis hyp(Formula a, IndexMap u) { return Hypothesis{std::move(a), std::move(u)}; }
Hypothesis empty_hyp() { return hyp(star({}), {}); }

// F = ⊥_{5,6} ⇒ ⊥_{1,2}
Formula arrow_f() { return Formula::arrow(star({5, 6}), {{5, 1}, {6, 2}}, star({1, 2})); }

// x1 : ⟨F⟩id, x2 : ⟨⊥_{7,8}⟩w ⊢ x1 x2 : ⊥_{1,2}
Proof app_proof(IndexMap w = {{7, 1}, {8, 2}}) {
  Formula f = arrow_f();
  Formula empty_f = restrict(f, {});
  Proof fun = make_axiom({hyp(f, IndexMap::identity(f.dom())), empty_hyp()}, 0);
  Proof arg = make_axiom({hyp(empty_f, {}), hyp(star({7, 8}), {{7, 5}, {8, 6}})}, 1);
  Sequent s{{hyp(f, IndexMap::identity(f.dom())), hyp(star({7, 8}), w)}, star({1, 2})};
  return Proof::elim(s, fun, arg, {ElimSplit{{1, 2}, {}}, ElimSplit{{}, {7, 8}}});
}

TEST(CheckProof, AxiomWithIdentity) {
  Formula a = Formula::atom("a", {{1, Point::atom("p")}});
  Proof p = make_axiom({hyp(a, {{1, 1}})}, 0);
  EXPECT_TRUE(check_proof(p));
  EXPECT_EQ(p.conclusion(), a);
  EXPECT_EQ(extract_term(p, {"x"}), lam("x"));
}

TEST(CheckProof, AxiomRelocates) {
  Formula a = Formula::atom("a", {{1, Point::atom("p")}, {2, Point::atom("q")}});
  Proof p = make_axiom({hyp(a, {{1, 8}, {2, 9}})}, 0);
  EXPECT_TRUE(check_proof(p));
  EXPECT_EQ(p.conclusion(), Formula::atom("a", {{8, Point::atom("p")}, {9, Point::atom("q")}}));
  Proof bad = Proof::axiom(Sequent{{hyp(a, {{1, 8}, {2, 8}})}, a}, 0);
  EXPECT_FALSE(check_proof(bad));
}

TEST(CheckProof, StarAxiom) {
  Proof p = Proof::star_axiom(Sequent{{}, star({})});
  EXPECT_TRUE(check_proof(p));
  EXPECT_EQ(extract_term(p, {}), Term::bot());
  EXPECT_FALSE(check_proof(Proof::star_axiom(Sequent{{}, star({1})})));
}

TEST(CheckProof, IntroOverAxiom) {
  Formula a = Formula::atom("a", {{3, Point::atom("p")}});
  Proof p = make_intro(make_axiom({hyp(a, {{3, 0}})}, 0));
  EXPECT_TRUE(check_proof(p));
  EXPECT_TRUE(p.hyps().empty());
  EXPECT_EQ(extract_term(p, {}), lam("\\x:a. x"));
}

TEST(CheckProof, ElimAndMutation) {
  Proof p = app_proof();
  ASSERT_TRUE(check_proof(p));
  EXPECT_EQ(extract_term(p, {"x1", "x2"}), lam("x1 x2"));
  Verdict v = check_proof(app_proof({{7, 2}, {8, 1}}));
  EXPECT_FALSE(v);
  EXPECT_EQ(v.path, "root");
  EXPECT_EQ(v.rule, "elim");
  Verdict nested = check_proof(make_intro(app_proof({{7, 2}, {8, 1}})));
  EXPECT_FALSE(nested);
  EXPECT_EQ(nested.path, "root.0");
}

TEST(CheckProof, MakeElimReadsSplits) {
  Proof p = app_proof();
  Proof q = make_elim(p.hyps(), p.premises()[0], p.premises()[1]);
  EXPECT_EQ(q, p);
}

TEST(Weaken, EveryPosition) {
  Proof p = app_proof();
  for (std::size_t pos = 0; pos <= 2; ++pos) {
    Proof w = weaken(p, star({}), pos);
    ASSERT_TRUE(check_proof(w)) << pos;
    EXPECT_EQ(w.hyps().size(), 3u);
    std::vector<std::string> names{"x1", "x2"};
    names.insert(names.begin() + static_cast<long>(pos), "d");
    EXPECT_EQ(extract_term(w, names), lam("x1 x2"));
    for (std::size_t pos2 = 0; pos2 <= 3; ++pos2) EXPECT_TRUE(check_proof(weaken(w, star({}), pos2)));
  }
  EXPECT_THROW(weaken(p, star({1}), 0), Error);
}

TEST(RelocateProof, IdentityAndRoundTrip) {
  Proof p = app_proof();
  EXPECT_EQ(relocate_proof(p, IndexMap::identity({1, 2})), p);
  IndexMap u{{1, 20}, {2, 10}};
  Proof q = relocate_proof(p, u);
  ASSERT_TRUE(check_proof(q));
  EXPECT_EQ(q.conclusion().dom(), (IndexSet{10, 20}));
  EXPECT_EQ(extract_term(q, {"x1", "x2"}), lam("x1 x2"));
  EXPECT_EQ(relocate_proof(q, u.inverse()).sequent(), p.sequent());
}

TEST(RestrictProof, FullAndEmpty) {
  Proof p = app_proof();
  EXPECT_EQ(restrict_proof(p, {1, 2}).sequent(), p.sequent());
  Proof e = restrict_proof(p, {});
  ASSERT_TRUE(check_proof(e));
  EXPECT_TRUE(e.conclusion().dom().empty());
  for (const auto& h : e.hyps()) EXPECT_TRUE(h.formula.dom().empty());
  Proof half = restrict_proof(p, {2});
  ASSERT_TRUE(check_proof(half));
  EXPECT_EQ(extract_term(half, {"x1", "x2"}), lam("x1 x2"));
}

TEST(Substitute, AxiomOnSubstitutedVariable) {
  Formula a = Formula::atom("a", {{3, Point::atom("p")}});
  Formula f = Formula::arrow(a, {{3, 0}}, Formula::atom("a", {{0, Point::atom("p")}}));
  Proof rho = make_intro(make_axiom({hyp(a, {{3, 0}})}, 0));
  Proof mu = make_axiom({hyp(f, {{0, 9}})}, 0);
  Proof pi = substitute_proof(mu, rho, 0, derive_merge_data(mu, rho, 0));
  ASSERT_TRUE(check_proof(pi));
  EXPECT_EQ(pi.conclusion(), relocate({{0, 9}}, f));
  EXPECT_EQ(extract_term(pi, {}), extract_term(rho, {}));
}

TEST(Substitute, AxiomOnOtherVariable) {
  Formula f = arrow_f();
  Proof mu = make_axiom({hyp(f, IndexMap::identity(f.dom())), empty_hyp()}, 0);
  Proof rho = empty_proof(star({}), {restrict(f, {})});
  Proof pi = substitute_proof(mu, rho, 1, derive_merge_data(mu, rho, 1));
  ASSERT_TRUE(check_proof(pi));
  EXPECT_EQ(extract_term(pi, {"x1"}), lam("x1"));
  for (std::size_t k = 1; k < pi.hyps().size(); ++k) EXPECT_TRUE(pi.hyps()[k].formula.dom().empty());
}

TEST(Substitute, ElimCase) {
  Proof mu = app_proof();
  Formula a2 = mu.hyps()[1].formula;
  Proof rho = sim_conversion(Formula::arrow(star({}), {}, a2), a2);
  ASSERT_TRUE(check_proof(rho));
  Proof pi = substitute_proof(mu, rho, 1, derive_merge_data(mu, rho, 1));
  ASSERT_TRUE(check_proof(pi));
  EXPECT_EQ(pi.conclusion(), mu.conclusion());
  Term expect = substitute(lam("x1 x2"), "x2", extract_term(rho, {"x1"}));
  EXPECT_EQ(extract_term(pi, {"x1"}), expect);
  EXPECT_EQ(expect, lam("x1 (x1 _)"));
}

TEST(SubstSingle, BothForms) {
  Proof mu = app_proof();
  Formula a0 = mu.hyps()[0].formula;
  Proof ax = make_axiom({hyp(a0, IndexMap::identity(a0.dom()))}, 0);
  Proof p1 = subst_single(mu, ax, 0);
  ASSERT_TRUE(check_proof(p1));
  EXPECT_EQ(p1.sequent(), mu.sequent());

  Formula b = mu.conclusion();
  Proof id = make_axiom({hyp(b, IndexMap::identity(b.dom()))}, 0);
  Proof p2 = subst_into_single(id, mu);
  ASSERT_TRUE(check_proof(p2));
  EXPECT_EQ(p2.conclusion(), mu.conclusion());
  EXPECT_EQ(extract_term(p2, {"x1", "x2"}), lam("x1 x2"));
}

TEST(SimConversion, Cases) {
  Proof same = sim_conversion(star({1}), star({1}));
  EXPECT_EQ(same.rule(), ProofRule::Axiom);
  EXPECT_EQ(extract_term(same, {"x"}), lam("x"));

  Formula a = Formula::arrow(star({3}), {{3, 1}}, star({1}));
  Formula b = Formula::arrow(star({8}), {{8, 1}}, star({1}));
  Proof ab = sim_conversion(a, b);
  ASSERT_TRUE(check_proof(ab));
  EXPECT_EQ(ab.conclusion(), b);
  EXPECT_TRUE(eta_equivalent(extract_term(ab, {"x"}), lam("x")));

  Proof lifted = sim_conversion(star({1}), Formula::arrow(star({}), {}, star({1})));
  ASSERT_TRUE(check_proof(lifted));
  Term t = extract_term(lifted, {"x"});
  EXPECT_EQ(t, lam("\\y. x"));
  EXPECT_TRUE(qproj_member(t, "x"));
  EXPECT_THROW(sim_conversion(star({1}), star({2})), Error);
}

TEST(EmptyProof, Cases) {
  Proof p = empty_proof(star({}), {});
  EXPECT_EQ(p.rule(), ProofRule::StarAxiom);
  Proof q = empty_proof(Formula::arrow(star({}), {}, star({})), {});
  ASSERT_TRUE(check_proof(q));
  EXPECT_EQ(omega_normalize(extract_term(q, {})), Term::bot());
  Proof r = empty_proof(Formula::arrow(star({}), {}, star({})), {star({}), restrict(arrow_f(), {})});
  ASSERT_TRUE(check_proof(r));
  EXPECT_EQ(omega_normalize(extract_term(r, {"x1", "x2"})), Term::bot());
}

}  // namespace
}  // namespace ilj
