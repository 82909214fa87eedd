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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ilj/error.hpp"
#include "ilj/point.hpp"
#include "ilj/terms.hpp"

namespace ilj {

struct VarDecl {
  std::string name;
  std::optional<SimpleType> type;  // typed system only

  friend bool operator==(const VarDecl&, const VarDecl&) = default;
};

struct ContextEntry {
  std::string var;
  Multiset<Point> mset;
  std::optional<SimpleType> type;

  friend bool operator==(const ContextEntry&, const ContextEntry&) = default;
};

// x_1 : m_1 (: σ_1), ..., x_n : m_n (: σ_n) ⊢ M : a (: σ)
struct TypingJudgment {
  std::vector<ContextEntry> context;
  Term subject;
  Point point;
  std::optional<SimpleType> type;

  std::vector<VarDecl> vars() const;
  friend bool operator==(const TypingJudgment&, const TypingJudgment&) = default;
};

enum class TypingRule { Var, Abs, App };

// App premises: the function derivation first, then one derivation per
// element of the argument multiset.
class TypingDeriv {
 public:
  TypingDeriv(TypingRule rule, TypingJudgment judgment, std::vector<TypingDeriv> premises = {});

  TypingRule rule() const;
  const TypingJudgment& judgment() const;
  const std::vector<TypingDeriv>& premises() const;

  friend bool operator==(const TypingDeriv& a, const TypingDeriv& b);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

const char* rule_name(TypingRule r);

Verdict check_typed(const TypingDeriv& d, const Carriers* carriers = nullptr);
Verdict check_untyped(const TypingDeriv& d);

// Renames a context variable throughout a derivation.
TypingDeriv rename_var(const TypingDeriv& d, const std::string& from, const std::string& to);

// Rule builders that compute the conclusion from the premises.
TypingDeriv make_var(const std::vector<VarDecl>& vars, std::size_t i, const Point& a);
// Abstracts the last context variable of the premise.
TypingDeriv make_abs(const TypingDeriv& premise);
TypingDeriv make_app(const TypingDeriv& fun, const Term& arg, const std::vector<TypingDeriv>& args);

struct SearchBounds {
  std::size_t card = 2;   // cardinality of each context multiset
  std::size_t weight = 2; // weight of the subject point and of context points
  // Bounds for intermediate points and λ-bound variables. Judgments
  // whose derivations need larger intermediates are not found.
  std::size_t inner_card = 2;
  std::size_t inner_weight = 6;
};

struct SearchResult {
  TypingJudgment judgment;
  TypingDeriv derivation;
};

// All derivable judgments for M over the given variable spine within
// the bounds, sorted by (context, point). Typed iff the spine is typed.
std::vector<SearchResult> search(const Term& m, const std::vector<VarDecl>& vars, const SearchBounds& bounds,
                                 const Carriers* carriers = nullptr);

}  // namespace ilj
