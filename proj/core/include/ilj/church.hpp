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

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ilj/error.hpp"
#include "ilj/formulas.hpp"
#include "ilj/ljker.hpp"
#include "ilj/terms.hpp"

namespace ilj {

// Church-style indexed pre-terms: x^J, λx^{A,u}.s, s t and Ω.
class PreTerm {
 public:
  enum class Kind { Var, Abs, App, Bot };

  static PreTerm var(std::string x, IndexSet j);
  static PreTerm abs(std::string x, Formula a, IndexMap u, PreTerm body);
  static PreTerm app(PreTerm s, PreTerm t);
  static PreTerm bot();

  Kind kind() const;
  const std::string& name() const;  // var and abs
  const IndexSet& domain() const;   // var
  const Formula& formula() const;   // abs
  const IndexMap& map() const;      // abs
  const PreTerm& body() const;      // abs
  const PreTerm& fun() const;       // app
  const PreTerm& arg() const;       // app

  friend bool operator==(const PreTerm& a, const PreTerm& b);
  std::string show() const;

 private:
  struct Node;
  explicit PreTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

using ChurchContext = std::vector<std::pair<std::string, Hypothesis>>;

IndexSet var_domain(const std::string& x, const PreTerm& s);
// Every application s₁ s₂ inside has disjoint variable domains.
bool is_term(const PreTerm& s);
Term erase(const PreTerm& s);

Verdict check_church(const ChurchContext& ctx, const PreTerm& s, const Formula& b);

// The pre-term denoting a proof, binders named as by extract_term.
PreTerm to_church(const Proof& p, const std::vector<std::string>& vars);
ChurchContext church_context(const Proof& p, const std::vector<std::string>& vars);

}  // namespace ilj
