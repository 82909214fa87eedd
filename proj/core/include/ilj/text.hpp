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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ilj/church.hpp"
#include "ilj/formulas.hpp"
#include "ilj/itsys.hpp"
#include "ilj/ljker.hpp"
#include "ilj/xlate.hpp"

namespace ilj {

// S-expressions: atoms and lists, `;` starts a line comment.
struct Sexpr {
  bool is_atom = true;
  std::string atom;
  std::vector<Sexpr> list;
  std::size_t line = 0;

  static Sexpr make_atom(std::string a);
  static Sexpr make_list(std::vector<Sexpr> xs);

  // Head symbol of a list, "" otherwise.
  const std::string& head() const;
  bool is(const std::string& h) const { return !is_atom && head() == h; }
  std::size_t size() const { return list.size(); }
  const Sexpr& operator[](std::size_t i) const;

  friend bool operator==(const Sexpr&, const Sexpr&);
};

std::vector<Sexpr> parse_sexprs(const std::string& text);
Sexpr parse_sexpr(const std::string& text);
// Single line when it fits in `width`, indented otherwise.
std::string print(const Sexpr& s, std::size_t width = 100);

Sexpr to_sexpr(const IndexSet& s);
Sexpr to_sexpr(const IndexMap& u);
Sexpr to_sexpr(const Point& p);
Sexpr to_sexpr(const Multiset<Point>& m);
Sexpr to_sexpr(const SimpleType& t);
Sexpr to_sexpr(const Term& m);
Sexpr to_sexpr(const Formula& a);
Sexpr to_sexpr(const Hypothesis& h);
Sexpr to_sexpr(const Sequent& s);
Sexpr to_sexpr(const Proof& p);
Sexpr to_sexpr(const TypingJudgment& j);
Sexpr to_sexpr(const TypingDeriv& d);
Sexpr to_sexpr(const FamilyTyping& f);
Sexpr to_sexpr(const PreTerm& s);
Sexpr to_sexpr(const ChurchContext& ctx);
Sexpr to_sexpr(const std::vector<VarDecl>& vars);
Sexpr to_sexpr(const Family& f);

Index read_index(const Sexpr& s);
IndexSet read_iset(const Sexpr& s);
IndexMap read_imap(const Sexpr& s);
Point read_point(const Sexpr& s);
Multiset<Point> read_mset(const Sexpr& s);
SimpleType read_type(const Sexpr& s);
Term read_term(const Sexpr& s);
Formula read_formula(const Sexpr& s);
Hypothesis read_hyp(const Sexpr& s);
Sequent read_sequent(const Sexpr& s);
Proof read_proof(const Sexpr& s);
TypingJudgment read_judgment(const Sexpr& s);
TypingDeriv read_deriv(const Sexpr& s);
FamilyTyping read_family(const Sexpr& s);
PreTerm read_preterm(const Sexpr& s);
ChurchContext read_church_context(const Sexpr& s);
std::vector<VarDecl> read_vars(const Sexpr& s);
Family read_points(const Sexpr& s);

}  // namespace ilj
