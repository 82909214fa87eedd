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
#include "ilj/text.hpp"
#include "lam.hpp"
#include "print.hpp"

namespace ilj {
namespace {

using testing::lam;

template <class T, class R>
void round_trip(const T& x, R read) {
  std::string text = print(to_sexpr(x));
  ASSERT_TRUE(read(parse_sexpr(text)) == x) << text;
  std::string narrow = print(to_sexpr(x), 20);
  ASSERT_TRUE(read(parse_sexpr(narrow)) == x) << narrow;
}

TEST(Sexpr, ParseAndComments) {
  auto xs = parse_sexprs("; header\n(a (b c) d) ; trailing\n e");
  ASSERT_EQ(xs.size(), 2u);
  EXPECT_TRUE(xs[0].is("a"));
  EXPECT_EQ(xs[0][1][1].atom, "c");
  EXPECT_EQ(xs[1].atom, "e");
  EXPECT_EQ(xs[0].line, 2u);
}

TEST(Sexpr, Errors) {
  EXPECT_THROW(parse_sexprs("(a (b"), ParseError);
  EXPECT_THROW(parse_sexprs("a)"), ParseError);
  EXPECT_THROW(parse_sexpr("a b"), ParseError);
  try {
    read_term(parse_sexpr("\n\n(app (var x))"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(Sexpr, PrintIsWidthBound) {
  Sexpr s = to_sexpr(lam("\\x y z. x (y z) (z y) (x x)"));
  for (std::size_t w : {10u, 40u, 100u}) {
    std::string out = print(s, w);
    EXPECT_EQ(parse_sexpr(out), s);
  }
  EXPECT_EQ(print(parse_sexpr("(a   b\n c)")), "(a b c)");
}

TEST(Text, Basics) {
  round_trip(lam("\\x:a->b. \\y:a. x y"), read_term);
  round_trip(lam("\\x. _ x"), read_term);
  round_trip(testing::ty("(a->b)->a"), read_type);
  round_trip(IndexSet{0, 4, 9}, read_iset);
  round_trip(IndexMap{{1, 4}, {2, 4}}, read_imap);
  round_trip(Point::tagged(2, Point::atom("p")), read_point);
  Family f{{0, Point::star()}, {3, Point::pair({Point::star(), Point::star()}, Point::star())}};
  round_trip(f, read_points);
  EXPECT_THROW(read_points(parse_sexpr("((1 star) (1 star))")), ParseError);
}

TEST(TextProperty, CorpusRoundTrip) {
  auto corpus = testing::make_corpus(3, 25, 25);
  ASSERT_GE(corpus.size(), 40u);
  for (const auto& item : corpus) {
    round_trip(item.proof, read_proof);
    round_trip(item.proof.conclusion(), read_formula);
    round_trip(item.proof.sequent(), read_sequent);
    round_trip(item.family.subject, read_term);
    round_trip(item.family.vars, read_vars);
    for (const auto& [j, d] : item.family.derivations) {
      round_trip(d, read_deriv);
      round_trip(d.judgment(), read_judgment);
    }
    FamilyTyping back = read_family(parse_sexpr(print(to_sexpr(item.family))));
    ASSERT_EQ(back.indices, item.family.indices);
    ASSERT_EQ(back.subject, item.family.subject);
    ASSERT_EQ(back.vars, item.family.vars);
    ASSERT_EQ(back.derivations, item.family.derivations);
    PreTerm s = to_church(item.proof, item.names);
    round_trip(s, read_preterm);
    round_trip(church_context(item.proof, item.names), read_church_context);
    for (const auto& h : item.proof.hyps()) round_trip(h, read_hyp);
  }
}

TEST(TextProperty, RandomPointsAndTerms) {
  testing::Rng rng(99);
  for (int t = 0; t < 500; ++t) {
    round_trip(testing::random_dinf_point(rng, 4), read_point);
    round_trip(testing::random_untyped_term(rng, 1 + rng.below(10), {"x", "y"}, true), read_term);
  }
}

}  // namespace
}  // namespace ilj
