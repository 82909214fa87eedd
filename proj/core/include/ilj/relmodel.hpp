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
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ilj/point.hpp"

namespace ilj {

// A small object of the relational Kleisli category: a finite set of
// points, a finite product (points tagged by component number), or an
// arrow object (pairs (m, b)) which is infinite and only tested.
class Object {
 public:
  enum class Kind { Base, Product, Arrow };

  static Object base(std::set<Point> elements);
  static Object product(std::vector<Object> components);
  static Object arrow(Object from, Object to);

  Kind kind() const { return kind_; }
  const std::set<Point>& elements() const;  // base objects only
  const std::vector<Object>& components() const { return parts_; }
  const Object& from() const;
  const Object& to() const;

  bool contains(const Point& p) const;
  bool finite() const;
  // Elements of a finite object, ascending.
  std::vector<Point> enumerate() const;

  friend bool operator==(const Object& a, const Object& b);

 private:
  Kind kind_ = Kind::Base;
  std::set<Point> elems_;
  std::vector<Object> parts_;
};

using Pair = std::pair<Multiset<Point>, Point>;

class Morphism {
 public:
  Morphism(Object source, Object target) : source_(std::move(source)), target_(std::move(target)) {}
  Morphism(Object source, Object target, std::set<Pair> pairs);

  const Object& source() const { return source_; }
  const Object& target() const { return target_; }
  const std::set<Pair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  void add(Multiset<Point> m, Point b);  // checks membership

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.pairs_ == b.pairs_;
  }

 private:
  Object source_;
  Object target_;
  std::set<Pair> pairs_;
};

Morphism identity(const Object& x);
// t ∘ s
Morphism compose(const Morphism& t, const Morphism& s);
// From Z & X to Y, into Z to (X ⇒ Y).
Morphism curry(const Morphism& s);
Morphism uncurry(const Morphism& s);
// Ev restricted to argument multisets of cardinality at most cap.
Morphism ev_fragment(const Object& x, const Object& y, std::size_t cap);
// π_i : X_1 & ... & X_n → X_i (i is 1-based).
Morphism projection(const Object& product, std::size_t i);
// ⟨s_1, ..., s_n⟩ : X → Y_1 & ... & Y_n
Morphism tuple(const std::vector<Morphism>& parts);

}  // namespace ilj
