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

#include "ilj/indices.hpp"
#include "ilj/point.hpp"
#include "ilj/terms.hpp"

namespace ilj {

enum class Flavor { Typed, Untyped };

// Indexed formula: ⟨α, f⟩, ⊥_J (untyped only) or A ⇒_u B. Domain and
// family are computed once at construction.
class Formula {
 public:
  enum class Kind { Atom, Star, Arrow };

  static Formula atom(std::string name, Family f);
  static Formula star(IndexSet j);
  // u must be total from dom(a) into dom(b).
  static Formula arrow(Formula a, IndexMap u, Formula b);

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_star() const { return kind() == Kind::Star; }
  bool is_arrow() const { return kind() == Kind::Arrow; }
  Flavor flavor() const;

  const std::string& atom_name() const;
  const Formula& from() const;
  const IndexMap& map() const;
  const Formula& to() const;

  const IndexSet& dom() const;
  const Family& fam() const;
  const Point& fam(Index j) const;
  // Underlying simple type (typed formulas only).
  SimpleType underlying() const;
  // Number of arrows along the codomain spine.
  std::size_t arrow_depth() const;
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

  std::string show() const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// ⟨A⟩u in a sequent: u maps dom(A) into the domain of the conclusion.
struct Hypothesis {
  Formula formula;
  IndexMap map;

  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

// fam(⟨A⟩u)_j = [fam(A)_k | u(k) = j]
Multiset<Point> hyp_family(const Hypothesis& h, Index j);

Formula restrict(const Formula& a, const IndexSet& j);
// u·A for a bijection u with source dom(A).
Formula relocate(const IndexMap& u, const Formula& a);
bool similar(const Formula& a, const Formula& b);
// The formula C with dom C = dom A + dom B restricting to A and B;
// throws when A and B are incompatible or their domains overlap.
Formula merge(const Formula& a, const Formula& b);

// Deterministic source of fresh indices: hands out the smallest
// naturals above a high-water mark.
class IndexAllocator {
 public:
  explicit IndexAllocator(Index start = 0) : next_(start) {}
  Index fresh() { return next_++; }
  IndexSet take(std::size_t n);
  // Moves the mark past every index of s.
  void avoid(const IndexSet& s);
  Index mark() const { return next_; }

 private:
  Index next_;
};

// A formula with dom J, family f and underlying type σ.
Formula represent(const SimpleType& sigma, const IndexSet& j, const Family& f, IndexAllocator& alloc);
// The untyped counterpart. With min_arrows = d the codomain spine has at
// least d arrows even where the family is ⋆.
Formula represent_dinf(const IndexSet& j, const Family& f, IndexAllocator& alloc, std::size_t min_arrows = 0);

}  // namespace ilj
